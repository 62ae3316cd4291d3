"""Shared resource limits and the exception used when one is exceeded."""

DEFAULT_POINT_BUDGET = 10**8
DEFAULT_STATE_LIMIT = 4096
DEFAULT_BLOWUP_LIMIT = 8192
DEFAULT_DEGREE_CAP = 64


class ResourceLimitExceeded(RuntimeError):
    """An operation would exceed its configured budget (points, states, degree)."""
