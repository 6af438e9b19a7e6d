import os

DEFAULT_TERM_CAP = 200_000


class ResourceLimitError(RuntimeError):
    """An enumeration grew past its configured cap."""


def term_cap_from_env(default: int = DEFAULT_TERM_CAP) -> int:
    raw = os.environ.get("TROPCIRC_TERM_CAP")
    return int(raw) if raw else default
