"""Cross-checked characterizations of Mersenne and 2-rooted primes.

Three isomorphic views of one structure: the group algebra GF(2)[C_p],
p-by-p circulant matrices over GF(2), and circulant bipartite graphs.
Each numbered characterization statement is evaluated through its own
view, and a sweep asserts that all verdicts agree prime by prime.
"""

__version__ = "0.1.0"

from . import backend
from .characterize import PrimeProfile, StatementResult, profile, sweep, sweep_summary
from .errors import (
    BudgetExceededError,
    MersrootError,
    ModulusMismatchError,
    NonUnitError,
    TheoremDisagreementError,
)

__all__ = [
    "__version__",
    "backend",
    "profile",
    "sweep",
    "sweep_summary",
    "PrimeProfile",
    "StatementResult",
    "BudgetExceededError",
    "MersrootError",
    "ModulusMismatchError",
    "NonUnitError",
    "TheoremDisagreementError",
]
