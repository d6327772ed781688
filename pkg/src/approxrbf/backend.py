"""Backend selection: compiled extension if available, numpy fallback otherwise.

Set APPROXRBF_BACKEND=python (or =compiled) to force a choice; forcing
"compiled" raises if the extension is missing instead of silently falling
back.
"""

import os

from . import _purecore

_forced = os.environ.get("APPROXRBF_BACKEND")

if _forced == "python":
    core = _purecore
else:
    try:
        from . import _fastcore as core  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise
        core = _purecore

BACKEND = core.NAME


def get_core(name=None):
    """Return a backend module by name ("python"/"compiled"); default is the
    one selected at import."""
    if name is None:
        return core
    if name == "python":
        return _purecore
    if name == "compiled":
        from . import _fastcore
        return _fastcore
    raise ValueError(f"unknown backend {name!r}")
