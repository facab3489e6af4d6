"""Exception hierarchy shared by all engines.

Every error carries the name of the module it originated in so the CLI can
report failures as ``error [fq-engine]: ...``.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class; ``module`` names the originating engine."""

    module = "arrpoly"

    def __init__(self, *args, module: str | None = None):
        super().__init__(*args)
        if module is not None:
            self.module = module

    def __str__(self) -> str:
        return f"[{self.module}] {super().__str__()}"


class InputError(ToolkitError, ValueError):
    """Malformed user input: degenerate equations, bad files, bad options."""

    module = "input"


class CapExceededError(ToolkitError):
    """An enumeration engine was asked for more work than its cap allows."""

    module = "subset-engine"


class CertificationError(ToolkitError):
    """A prime failed the reduction-correctness checks required by an engine."""

    module = "fq-engine"


class IntegrityAlarm(ToolkitError):
    """An exactness self-check failed: nonzero remainder in an exact division
    or a non-integer interpolated coefficient.  Signals inconsistent inputs
    (or a bug), never a tolerance issue."""

    module = "exact-poly"


class SymmetryError(ToolkitError):
    """The arrangement is not closed under coordinate permutations."""

    module = "symmetric-engine"


class PatternDivergenceError(ToolkitError):
    """The pattern-counting formula disagreed with direct point counting on
    this arrangement, so the closed-form engine refuses to proceed."""

    module = "symmetric-engine"
