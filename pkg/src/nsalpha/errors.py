"""Exception types shared across the package.

Configuration problems and numerical failures are kept distinct so the
command-line layer can map them to different exit codes (2 and 3).
"""


class ConfigurationError(ValueError):
    """A parameter combination that can be rejected before any computation."""


class NumericalError(RuntimeError):
    """A computation that started but cannot be completed reliably."""


class BlowUpError(NumericalError):
    """Trajectory left the trusted range (non-finite or huge coefficients).

    Carries enough context to locate the failure and, when checkpointing
    is active, the path of the last state written before the blow-up.
    """

    def __init__(self, message, t=None, step_index=None, max_abs_coeff=None,
                 checkpoint_path=None):
        super().__init__(message)
        self.t = t
        self.step_index = step_index
        self.max_abs_coeff = max_abs_coeff
        self.checkpoint_path = checkpoint_path
