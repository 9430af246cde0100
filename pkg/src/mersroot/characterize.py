"""Evaluate every numbered characterization statement for a prime and
assert cross-statement agreement.

Theorem-one statements (twelve of them) all hold exactly when p is a
Mersenne prime; theorem-two statements (ten) all hold exactly when 2 is
a primitive root mod p.  Each statement is evaluated through its natural
module: number theory, the group algebra, circulant matrices, or
bipartite graphs.  Statements quantifying over all groups and fields are
evaluated through their canonical witness GF(2)[C_p] and labeled
"witnessed"; everything else is either a "direct" computation or an
exhaustive "oracle" scan within a budget.

Any disagreement among verdicts falsifies a theorem and therefore always
signals an implementation defect; sweeps abort on it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bigraph, circulant, galgebra, numtheory
from .errors import TheoremDisagreementError

ORACLE_CAP_DEFAULT = 13
ORACLE_CAP_MAX = 15  # the matching scans grow as 4**p; hard stop
AUGMENTATION_SCAN_CAP = 25
GRAPH_PSEUDOPATH_SCAN_CAP = 9
REDUCED_T1_SET = (1, 2, 3, 4, 8, 11)
T1_STATEMENTS = tuple(range(1, 13))
T2_STATEMENTS = tuple(range(1, 11))

_STAR = 0b111  # 1 + x + x**2, the smallest interesting unit
_EDGE = 0b11  # 1 + x
_CUBE = 0b1001  # 1 + x**3


@dataclass(frozen=True)
class StatementResult:
    theorem: int
    statement_id: int
    verdict: bool
    evaluator_kind: str  # "direct" | "oracle" | "witnessed"
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement_id,
            "verdict": self.verdict,
            "evaluator": self.evaluator_kind,
            "elapsed_s": round(self.elapsed, 6),
        }


@dataclass(frozen=True)
class PrimeProfile:
    p: int
    ord2: int
    mersenne: bool
    two_rooted: bool
    t1_results: tuple[StatementResult, ...]
    t2_results: tuple[StatementResult, ...]
    t1_agree: bool
    t2_agree: bool
    mod8: int

    @property
    def reduced_t1_set(self) -> bool:
        return self.p == 3

    @property
    def agree(self) -> bool:
        return self.t1_agree and self.t2_agree

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "ord2": self.ord2,
            "mersenne": self.mersenne,
            "two_rooted": self.two_rooted,
            "mod8": self.mod8,
            "reduced_t1_set": self.reduced_t1_set,
            "t1": [r.to_dict() for r in self.t1_results],
            "t2": [r.to_dict() for r in self.t2_results],
            "t1_agree": self.t1_agree,
            "t2_agree": self.t2_agree,
        }


class _EvalContext:
    """Per-prime scan results shared across statement evaluators."""

    def __init__(self, p: int, oracle_cap: int):
        self.p = p
        self.oracle_cap = min(oracle_cap, ORACLE_CAP_MAX)
        self._cache: dict[str, object] = {}

    def _get(self, key, producer):
        if key not in self._cache:
            self._cache[key] = producer()
        return self._cache[key]

    def unit_scan(self) -> tuple[int, int]:
        return self._get("unit_scan", lambda: galgebra.unit_scan_counts(self.p, AUGMENTATION_SCAN_CAP))

    def order_census(self) -> tuple[int, int, bool]:
        return self._get("census", lambda: galgebra.unit_order_census(self.p, self.oracle_cap))

    def circulant_flags(self) -> tuple[np.ndarray, np.ndarray]:
        def build():
            inv, pow_i = circulant.scan_flags(self.p, self.oracle_cap)
            return (
                np.frombuffer(inv, dtype=np.uint8).astype(bool),
                np.frombuffer(pow_i, dtype=np.uint8).astype(bool),
            )

        return self._get("circ", build)

    def matching_flags(self) -> np.ndarray:
        return self._get(
            "match",
            lambda: np.frombuffer(
                bigraph.matching_parity_flags(self.p, self.oracle_cap), dtype=np.uint8
            ).astype(bool),
        )

    def column_weights(self) -> np.ndarray:
        return self._get(
            "weights", lambda: np.bitwise_count(np.arange(1 << self.p, dtype=np.uint32))
        )


def _unit_bound(p: int) -> int:
    return (1 << (p - 1)) - 1


def _mersenne_formula(p: int) -> bool:
    # Every nontrivial unit has order p iff each cyclic factor of the unit
    # group is C_p itself, i.e. 2**ord_p(2) - 1 = p.
    return (1 << numtheory.mult_order(2, p)) - 1 == p


def _t1_evaluator(p: int, k: int, ctx: _EvalContext) -> tuple[bool, str]:
    cap = ctx.oracle_cap
    if k == 1:
        return numtheory.is_mersenne_prime(p), "direct"
    if k in (2, 3):
        # Existential over all groups and fields; witnessed by GF(2)[C_p].
        verdict, _ = _t1_evaluator(p, 4, ctx)
        return verdict, "witnessed"
    if k == 4:
        if p <= cap:
            _, _, all_nontrivial = ctx.order_census()
            return all_nontrivial, "oracle"
        return _mersenne_formula(p), "direct"
    if k == 5:
        star = galgebra.GroupAlgebraElement(p, _STAR)
        return galgebra.power(star, p).bits == 1, "direct"
    if k == 6:
        lhs = galgebra.power(galgebra.GroupAlgebraElement(p, _EDGE), p)
        rhs = galgebra.power(galgebra.GroupAlgebraElement(p, _CUBE), p)
        return lhs.bits == rhs.bits, "direct"
    if k == 7:
        return numtheory.triple_symmetry(p), "direct"
    if k == 8:
        if p <= cap:
            invertible, pow_identity = ctx.circulant_flags()
            nontrivial = np.ones(1 << p, dtype=bool)
            nontrivial[1] = False  # the identity circulant
            return bool((~invertible | ~nontrivial | pow_identity).all()), "oracle"
        return _mersenne_formula(p), "direct"
    if k == 9:
        power = circulant.matpow(circulant.CirculantMatrix(p, _STAR), p)
        return power.first_column == 1, "direct"
    if k == 10:
        lhs = circulant.matpow(circulant.CirculantMatrix(p, _EDGE), p)
        rhs = circulant.matpow(circulant.CirculantMatrix(p, _CUBE), p)
        return lhs.first_column == rhs.first_column, "direct"
    if k == 11:
        if p <= min(cap, GRAPH_PSEUDOPATH_SCAN_CAP):
            odd_matching = ctx.matching_flags()
            _, pow_identity = ctx.circulant_flags()
            return bool((~odd_matching | pow_identity).all()), "oracle"
        return _mersenne_formula(p), "direct"
    if k == 12:
        graph = bigraph.from_first_column(p, _STAR)
        return bigraph.pseudopath_parity(graph, p).is_identity_pattern, "direct"
    raise ValueError(f"theorem 1 has no statement {k}")


def _t2_evaluator(p: int, k: int, ctx: _EvalContext) -> tuple[bool, str]:
    cap = ctx.oracle_cap
    bound = _unit_bound(p)
    if k == 1:
        return numtheory.is_two_rooted(p), "direct"
    if k == 2:
        if p <= cap:
            n_units, _ = ctx.unit_scan()
            return n_units == bound, "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 3:
        if p <= cap:
            _, n_order_p, _ = ctx.order_census()
            return n_order_p == p - 1, "oracle"
        return galgebra.order_p_unit_count(p) == p - 1, "direct"
    if k == 4:
        if p <= AUGMENTATION_SCAN_CAP:
            _, n_eps1_nonunit = ctx.unit_scan()
            # The norm element is the single sanctioned exception.
            return n_eps1_nonunit == 1, "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 5:
        if p <= cap:
            invertible, _ = ctx.circulant_flags()
            return int(invertible.sum()) == bound, "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 6:
        if p <= cap:
            invertible, pow_identity = ctx.circulant_flags()
            permutation = ctx.column_weights() == 1
            return bool((~(invertible & pow_identity) | permutation).all()), "oracle"
        return galgebra.order_p_unit_count(p) == p - 1, "direct"
    if k == 7:
        if p <= cap:
            invertible, _ = ctx.circulant_flags()
            odd_weight = (ctx.column_weights() & 1).astype(bool)
            not_j = np.ones(1 << p, dtype=bool)
            not_j[(1 << p) - 1] = False
            return bool((~(odd_weight & not_j) | invertible).all()), "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 8:
        if p <= cap:
            return int(ctx.matching_flags().sum()) == bound, "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 9:
        if p <= cap:
            odd_matching = ctx.matching_flags()
            odd_degree = (ctx.column_weights() & 1).astype(bool)
            not_complete = np.ones(1 << p, dtype=bool)
            not_complete[(1 << p) - 1] = False
            return bool((~(odd_degree & not_complete) | odd_matching).all()), "oracle"
        return galgebra.unit_count(p) == bound, "direct"
    if k == 10:
        if p <= cap:
            odd_matching = ctx.matching_flags()
            _, pow_identity = ctx.circulant_flags()
            degree_one = ctx.column_weights() == 1
            return bool((~(odd_matching & pow_identity) | degree_one).all()), "oracle"
        return galgebra.order_p_unit_count(p) == p - 1, "direct"
    raise ValueError(f"theorem 2 has no statement {k}")


def _timed(theorem: int, k: int, p: int, ctx: _EvalContext) -> StatementResult:
    evaluator = _t1_evaluator if theorem == 1 else _t2_evaluator
    start = time.perf_counter()
    verdict, kind = evaluator(p, k, ctx)
    return StatementResult(theorem, k, bool(verdict), kind, time.perf_counter() - start)


def t1_statement(p: int, k: int, oracle_cap: int = ORACLE_CAP_DEFAULT) -> StatementResult:
    """Verdict of theorem-one statement k at p; defined for primes p > 3
    (at p = 3 only the reduced statement set survives; see profile)."""
    if p <= 3 or not numtheory.is_prime(p):
        raise ValueError("theorem-one statements apply to primes p > 3")
    if k not in T1_STATEMENTS:
        raise ValueError(f"theorem 1 has no statement {k}")
    return _timed(1, k, p, _EvalContext(p, oracle_cap))


def t2_statement(p: int, k: int, oracle_cap: int = ORACLE_CAP_DEFAULT) -> StatementResult:
    """Verdict of theorem-two statement k at an odd prime p."""
    numtheory.require_odd_prime(p)
    if k not in T2_STATEMENTS:
        raise ValueError(f"theorem 2 has no statement {k}")
    return _timed(2, k, p, _EvalContext(p, oracle_cap))


def profile(p: int, oracle_cap: int = ORACLE_CAP_DEFAULT) -> PrimeProfile:
    """Evaluate all applicable statements at p and set agreement flags.

    At p = 3 only the reduced theorem-one set {1, 2, 3, 4, 8, 11} is
    evaluated (the star element 1 + x + x**2 degenerates to the norm
    element there and the remaining statements break down).
    """
    numtheory.require_odd_prime(p)
    ctx = _EvalContext(p, oracle_cap)
    t1_ids = REDUCED_T1_SET if p == 3 else T1_STATEMENTS
    t1 = tuple(_timed(1, k, p, ctx) for k in t1_ids)
    t2 = tuple(_timed(2, k, p, ctx) for k in T2_STATEMENTS)
    return PrimeProfile(
        p=p,
        ord2=numtheory.mult_order(2, p),
        mersenne=numtheory.is_mersenne_prime(p),
        two_rooted=numtheory.is_two_rooted(p),
        t1_results=t1,
        t2_results=t2,
        t1_agree=len({r.verdict for r in t1}) == 1,
        t2_agree=len({r.verdict for r in t2}) == 1,
        mod8=numtheory.mod8_residue(p),
    )


def _profile_worker(args: tuple[int, int]) -> PrimeProfile:
    p, oracle_cap = args
    return profile(p, oracle_cap)


def sweep(
    lo: int,
    hi: int,
    jobs: int | None = None,
    oracle_cap: int = ORACLE_CAP_DEFAULT,
    raise_on_disagreement: bool = True,
) -> list[PrimeProfile]:
    """Profiles for every odd prime in [lo, hi], sorted by p.

    The even prime 2 is outside every statement's hypothesis and is
    skipped.  A verdict disagreement aborts the sweep (it falsifies a
    theorem, i.e. exposes an implementation bug) unless told otherwise.
    """
    if lo > hi:
        raise ValueError("empty range")
    primes = [p for p in numtheory.primes_in_range(lo, hi) if p != 2]
    if jobs is not None and jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            profiles = list(pool.map(_profile_worker, [(p, oracle_cap) for p in primes]))
    else:
        profiles = [profile(p, oracle_cap) for p in primes]
    profiles.sort(key=lambda prof: prof.p)
    if raise_on_disagreement:
        for prof in profiles:
            if not prof.agree:
                raise TheoremDisagreementError(prof)
    return profiles


def sweep_summary(profiles: list[PrimeProfile]) -> dict:
    return {
        "primes": len(profiles),
        "mersenne": [prof.p for prof in profiles if prof.mersenne],
        "two_rooted": [prof.p for prof in profiles if prof.two_rooted],
        "disagreements": sum(0 if prof.agree else 1 for prof in profiles),
    }
