import os


class OmegaError(Exception):
    """Base class for library errors."""


class InvalidAutomaton(OmegaError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SizeGuardError(OmegaError, RuntimeError):
    """A construction or the membership oracle would exceed its size limit."""


class UnsupportedCondition(OmegaError, ValueError):
    pass


class PreconditionError(OmegaError, ValueError):
    pass


DEFAULT_LIMITS = {
    "product_states": 12,   # |Q| for Q x P(Q) products
    "fin_eq_states": 8,     # |Q| for the Q u QxQ construction
    "powerset_members": 12, # max |F| / |Q| when enumerating powersets
    "oracle_pairs": 1 << 20,
}

ENV_VAR = "OMEGA_SIZE_GUARD"


def limit(name: str) -> int:
    """Current limit for ``name``; ``OMEGA_SIZE_GUARD`` overrides the
    construction limits (not the oracle limit)."""
    if name != "oracle_pairs":
        override = os.environ.get(ENV_VAR)
        if override:
            return int(override)
    return DEFAULT_LIMITS[name]


def check_limit(name: str, value: int, what: str = "") -> None:
    lim = limit(name)
    if value > lim:
        raise SizeGuardError(f"{what or name}: {value} exceeds limit {lim}")
