"""Exception types shared across the package."""


class MersrootError(Exception):
    """Base class for all package-specific errors."""


class ModulusMismatchError(MersrootError, ValueError):
    """Two elements with different moduli were combined."""


class NonUnitError(MersrootError, ValueError):
    """Inversion was requested for an element that is not invertible."""


class BudgetExceededError(MersrootError, RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


class TheoremDisagreementError(MersrootError, RuntimeError):
    """Statement verdicts for one prime disagree.

    The characterization theorems guarantee agreement, so this always
    signals an implementation defect, never a mathematical discovery.
    """

    def __init__(self, profile, message=None):
        self.profile = profile
        super().__init__(message or f"statement verdicts disagree at p={profile.p}")
