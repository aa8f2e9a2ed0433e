import os

LATTICE_CAP = 200_000
SEARCH_BUDGET = 1_000_000
COMPONENT_CAP = 100_000
ENV_BUDGET = "SHIFTLAB_BUDGET"


def budget(default: int) -> int:
    """Resource cap, overridden by the SHIFTLAB_BUDGET environment variable."""
    raw = os.environ.get(ENV_BUDGET)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SHIFTLAB_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("SHIFTLAB_BUDGET must be positive")
    return value
