"""Small graph routines over adjacency lists indexed by int."""
from collections import deque


def sccs(succ, vertices):
    """Strongly connected components of the subgraph induced by ``vertices``
    (iterative Tarjan).  Components come out in reverse topological order."""
    allowed = vertices if isinstance(vertices, (set, frozenset)) else set(vertices)
    index, low, on_stack = {}, {}, set()
    stack, out = [], []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def nontrivial(succ, comp) -> bool:
    """A component carries an infinite path iff it has >1 vertex or a self-loop."""
    if len(comp) > 1:
        return True
    v = comp[0]
    return v in succ[v]


def nontrivial_sccs(succ, vertices):
    return [c for c in sccs(succ, vertices) if nontrivial(succ, c)]


def shortest_path(succ, start, goal, allowed=None):
    """Shortest nonempty vertex path from ``start`` to ``goal`` (start
    excluded, goal included), or None."""
    parent = {}
    todo = deque()
    for w in succ[start]:
        if (allowed is None or w in allowed) and w not in parent:
            parent[w] = None
            todo.append(w)
    while todo:
        v = todo.popleft()
        if v == goal:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in succ[v]:
            if (allowed is None or w in allowed) and w not in parent:
                parent[w] = v
                todo.append(w)
    return None
