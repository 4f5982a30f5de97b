import os


def _env(name: str, default, cast):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    if cast is bool:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    try:
        return cast(raw)
    except ValueError:
        return raw


SIGMA_LAB_TIE_TOL: float = _env("SIGMA_LAB_TIE_TOL", 1e-9, float)
assert isinstance(SIGMA_LAB_TIE_TOL, float), "SIGMA_LAB_TIE_TOL must be a float"
assert SIGMA_LAB_TIE_TOL >= 0.0, "SIGMA_LAB_TIE_TOL must be non-negative"

SIGMA_LAB_EIG_TOL: float = _env("SIGMA_LAB_EIG_TOL", 1e-14, float)
assert isinstance(SIGMA_LAB_EIG_TOL, float), "SIGMA_LAB_EIG_TOL must be a float"

SIGMA_LAB_MAX_SWEEPS: int = _env("SIGMA_LAB_MAX_SWEEPS", 50, int)
assert isinstance(SIGMA_LAB_MAX_SWEEPS, int), "SIGMA_LAB_MAX_SWEEPS must be an int"

SIGMA_LAB_SPECTRUM_TOL: float = _env("SIGMA_LAB_SPECTRUM_TOL", 1e-8, float)
assert isinstance(
    SIGMA_LAB_SPECTRUM_TOL, float
), "SIGMA_LAB_SPECTRUM_TOL must be a float"

SIGMA_LAB_MAX_ENUMERATE: int = _env("SIGMA_LAB_MAX_ENUMERATE", 8, int)
assert isinstance(
    SIGMA_LAB_MAX_ENUMERATE, int
), "SIGMA_LAB_MAX_ENUMERATE must be an int"
assert 1 <= SIGMA_LAB_MAX_ENUMERATE <= 8, "SIGMA_LAB_MAX_ENUMERATE must be in 1..8"

SIGMA_LAB_JOBS: int = _env("SIGMA_LAB_JOBS", 1, int)
assert isinstance(SIGMA_LAB_JOBS, int), "SIGMA_LAB_JOBS must be an int"

SIGMA_LAB_LOG_LEVEL: str = _env("SIGMA_LAB_LOG_LEVEL", "WARNING", str).upper()
assert SIGMA_LAB_LOG_LEVEL in [
    "DEBUG",
    "INFO",
    "WARNING",
    "ERROR",
    "CRITICAL",
], "SIGMA_LAB_LOG_LEVEL must be one of DEBUG, INFO, WARNING, ERROR, CRITICAL"

SIGMA_LAB_PROGRESS: bool = _env("SIGMA_LAB_PROGRESS", False, bool)
assert isinstance(SIGMA_LAB_PROGRESS, bool), "SIGMA_LAB_PROGRESS must be a bool"
