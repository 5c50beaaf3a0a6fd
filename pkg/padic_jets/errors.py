"""
Exception roots for padic-jets.

Every error raised by the library derives from one of three roots, which the
command-line front end maps onto its exit-code contract:

  InputError          → exit 1  (malformed input, unsupported parameters)
  HypothesisViolated  → exit 2  (a mathematical precondition does not hold)
  PrecisionError      → exit 3  (working precision ran out)

Concrete errors live next to the code that raises them.
"""


class PadicJetsError(Exception):
    """Base class for all padic-jets errors."""

    exit_code = 1


class InputError(PadicJetsError, ValueError):
    """Raised for malformed input or parameters outside the supported range."""

    exit_code = 1


class HypothesisViolated(PadicJetsError):
    """Raised when a mathematical hypothesis of an operation fails.

    Args:
        hypothesis: Short name of the failed hypothesis (e.g. ``"r < g"``).
        detail: Optional human-readable explanation.
    """

    exit_code = 2

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = f"hypothesis violated: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PrecisionError(PadicJetsError):
    """Raised when a result cannot be certified at the available precision."""

    exit_code = 3


def exit_code_for(exc: BaseException) -> int:
    """Return the CLI exit code for *exc* (1 for anything unrecognised)."""
    return getattr(exc, "exit_code", 1)
