"""Batch verification of closed forms and identities against the
polynomial recursion.

Each verification op walks a parameter range, compares an exact closed
form or identity against values computed independently by the
recursion, and returns a :class:`VerificationReport`.  Failures are
collected rather than raised, with both polynomials recorded verbatim,
so a report is always produced and discrepancies stay auditable.

Cases are independent of one another.  When the environment variable
``KL_ENGINE_THREADS`` is set to an integer above 1, cases are spread
over that many worker threads, each owning a private polynomial cache;
sequential runs use the caller's cache when one is given.  Reports are
deterministic for a fixed seed and range either way, since failures
are sorted before emission.
"""

from __future__ import annotations

import json
import os
import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, TypeVar

from .bruhat import bruhat_leq, coatom_count, down_set, interval
from .families import (
    closed_form_inverse,
    closed_form_regular,
    family_pair,
)
from .kl import (
    KLCache,
    check_inversion_identity,
    inverse_kl,
    is_smooth_top,
    kl_polynomial,
)
from .perm import Perm, all_perms, compose, format_perm, longest_element
from .polynomial import ONE

_CaseT = TypeVar("_CaseT")


@dataclass(frozen=True)
class Failure:
    """One failed comparison: which case, and both polynomials."""

    case: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    check: str
    parameter_range: str
    cases: int
    failures: list[Failure]
    seed: Optional[int] = None
    millis: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "range": self.parameter_range,
            "cases": self.cases,
            "failures": [
                {"case": f.case, "expected": f.expected, "actual": f.actual}
                for f in self.failures
            ],
            "seed": self.seed,
            "millis": self.millis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def text(self) -> str:
        """Human-readable block, one field per line."""
        lines = [
            f"check: {self.check}",
            f"range: {self.parameter_range}",
            f"cases: {self.cases}",
        ]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.append(f"millis: {self.millis}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.failures:
            lines.append(f"result: FAIL ({len(self.failures)} failures)")
            for f in self.failures:
                lines.append(f"  {f.case}: expected {f.expected}, got {f.actual}")
        else:
            lines.append("result: PASS")
        return "\n".join(lines)


def worker_count() -> int:
    """Worker threads requested via KL_ENGINE_THREADS; 0 means run
    sequentially.  Unset, empty or malformed values also mean 0."""
    raw = os.environ.get("KL_ENGINE_THREADS", "").strip()
    if not raw:
        return 0
    try:
        value = int(raw)
    except ValueError:
        return 0
    return value if value > 1 else 0


def _cache_options(cache: Optional[KLCache]) -> dict:
    if cache is None:
        return {}
    return {
        "descent_strategy": cache.descent_strategy,
        "raise_bottoms": cache.raise_bottoms,
        "max_entries": cache.max_entries,
    }


def _run_cases(
    cases: Sequence[_CaseT],
    evaluate: Callable[[_CaseT, KLCache], Optional[Failure]],
    cache: Optional[KLCache],
) -> list[Failure]:
    """Evaluate every case, in the caller's thread or a pool.

    Threaded runs give each worker its own cache configured like the
    caller's; values for one key never differ, so sharing nothing is
    the simplest way to honor the cache contract.
    """
    threads = worker_count()
    if threads > 1 and len(cases) > 1:
        options = _cache_options(cache)
        local = threading.local()

        def run(case: _CaseT) -> Optional[Failure]:
            mine = getattr(local, "cache", None)
            if mine is None:
                mine = KLCache(**options)
                local.cache = mine
            return evaluate(case, mine)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, cases))
    else:
        shared = cache if cache is not None else KLCache()
        results = [evaluate(case, shared) for case in cases]
    return sorted(
        (f for f in results if f is not None), key=lambda f: f.case
    )


def _family_cases(max_n: int, case_cap: Optional[int]) -> list[tuple[str, int, int]]:
    cases = []
    for pair, extra in (("x", 0), ("y", 2)):
        for k in range(1, max_n):
            for m in range(1, max_n):
                if k + m + extra <= max_n:
                    cases.append((pair, k, m))
    if case_cap is not None:
        cases = cases[:case_cap]
    return cases


def verify_regular_closed_forms(
    max_n: int = 7,
    cache: Optional[KLCache] = None,
    case_cap: Optional[int] = None,
) -> VerificationReport:
    """Check the closed forms of kl on both family pairs, including the
    requirement that every strict-interior element of each interval has
    polynomial 1 against the top."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    cases = _family_cases(max_n, case_cap)

    def evaluate(case: tuple[str, int, int], c: KLCache) -> Optional[Failure]:
        pair, k, m = case
        bottom, top = family_pair(pair, k, m)
        expected = closed_form_regular(pair, k, m)
        actual = kl_polynomial(bottom, top, c)
        if actual != expected:
            return Failure(f"{pair}-pair k={k} m={m}", str(expected), str(actual))
        for z in interval(bottom, top).sorted_elements():
            if z == bottom or z == top:
                continue
            p = kl_polynomial(z, top, c)
            if p != ONE:
                return Failure(
                    f"{pair}-pair k={k} m={m} interior z={format_perm(z)}",
                    "1",
                    str(p),
                )
        return None

    start = time.perf_counter()
    failures = _run_cases(cases, evaluate, cache)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        check="regular-closed-forms",
        parameter_range=f"family size <= {max_n}",
        cases=len(cases),
        failures=failures,
        millis=millis,
    )


def verify_inverse_closed_forms(
    max_n: int = 7,
    cache: Optional[KLCache] = None,
    case_cap: Optional[int] = None,
) -> VerificationReport:
    """Check the closed forms of inverse_kl on both family pairs."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    cases = _family_cases(max_n, case_cap)

    def evaluate(case: tuple[str, int, int], c: KLCache) -> Optional[Failure]:
        pair, k, m = case
        bottom, top = family_pair(pair, k, m)
        expected = closed_form_inverse(pair, k, m)
        actual = inverse_kl(bottom, top, c)
        if actual != expected:
            return Failure(f"{pair}-pair k={k} m={m}", str(expected), str(actual))
        return None

    start = time.perf_counter()
    failures = _run_cases(cases, evaluate, cache)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        check="inverse-closed-forms",
        parameter_range=f"family size <= {max_n}",
        cases=len(cases),
        failures=failures,
        millis=millis,
    )


def random_comparable_pair(n: int, rng: random.Random) -> tuple[Perm, Perm]:
    """A uniformly chosen pair (x, w) in S_n with x <= w, by rejection."""
    base = list(range(1, n + 1))
    while True:
        w = base[:]
        rng.shuffle(w)
        x = base[:]
        rng.shuffle(x)
        if bruhat_leq(tuple(x), tuple(w)):
            return tuple(x), tuple(w)


def verify_inversion_identity_batch(
    n: int = 4,
    cache: Optional[KLCache] = None,
    samples: Optional[int] = None,
    seed: int = 0,
    case_cap: Optional[int] = None,
) -> VerificationReport:
    """Check the alternating inversion identity on comparable pairs.

    With ``samples`` unset the check is exhaustive over S_n, which is
    only reasonable for n <= 5; above that a sample count is required
    and pairs are drawn with the given seed.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if samples is None:
        if n > 5:
            raise ValueError(
                f"exhaustive check over S_{n} is too large; pass a sample count"
            )
        cases = [
            (x, w)
            for w in all_perms(n)
            for x in all_perms(n)
            if bruhat_leq(x, w)
        ]
        parameter_range = f"S_{n} exhaustive"
        used_seed = None
    else:
        if samples < 1:
            raise ValueError(f"samples must be >= 1, got {samples}")
        rng = random.Random(seed)
        cases = [random_comparable_pair(n, rng) for _ in range(samples)]
        parameter_range = f"S_{n}, {samples} sampled pairs"
        used_seed = seed
    if case_cap is not None:
        cases = cases[:case_cap]

    def evaluate(case: tuple[Perm, Perm], c: KLCache) -> Optional[Failure]:
        x, w = case
        if not check_inversion_identity(x, w, c):
            return Failure(
                f"x={format_perm(x)} w={format_perm(w)}",
                "delta(x, w)",
                "nonzero deviation",
            )
        return None

    start = time.perf_counter()
    failures = _run_cases(cases, evaluate, cache)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        check="inversion-identity",
        parameter_range=parameter_range,
        cases=len(cases),
        failures=failures,
        seed=used_seed,
        millis=millis,
    )


def verify_smoothness_equivalence(
    n: int = 5,
    cache: Optional[KLCache] = None,
    case_cap: Optional[int] = None,
) -> VerificationReport:
    """Check, for every top in S_n, that the pattern test for an
    all-ones column agrees with direct computation of the column."""
    if not (2 <= n <= 6):
        raise ValueError(f"n must be between 2 and 6, got {n}")
    cases = list(all_perms(n))
    if case_cap is not None:
        cases = cases[:case_cap]

    def evaluate(w: Perm, c: KLCache) -> Optional[Failure]:
        by_pattern = is_smooth_top(w)
        by_column = all(kl_polynomial(z, w, c) == ONE for z in down_set(w))
        if by_pattern != by_column:
            return Failure(
                f"w={format_perm(w)}",
                f"pattern test {by_pattern}",
                f"column check {by_column}",
            )
        return None

    start = time.perf_counter()
    failures = _run_cases(cases, evaluate, cache)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        check="smoothness-equivalence",
        parameter_range=f"all tops in S_{n}",
        cases=len(cases),
        failures=failures,
        millis=millis,
    )


def verify_coatom_bound(
    k_max: int = 3,
    cache: Optional[KLCache] = None,
    case_cap: Optional[int] = None,
) -> VerificationReport:
    """Check the coatom bound on the linear coefficient along the
    diagonal family: [q^1] of the inverse closed form at (k, k) must be
    (k-1)^2 and at most coatom_count - 1 for its interval.

    The ratio coefficient/coatoms is reported as a note per k so the
    asymptotic behaviour can be eyeballed.
    """
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    cases = list(range(2, k_max + 1))
    if case_cap is not None:
        cases = cases[:case_cap]
    notes: list[str] = []
    note_lock = threading.Lock()

    def evaluate(k: int, c: KLCache) -> Optional[Failure]:
        coefficient = closed_form_inverse("x", k, k).coefficient(1)
        if coefficient != (k - 1) ** 2:
            return Failure(
                f"k={k} linear coefficient",
                str((k - 1) ** 2),
                str(coefficient),
            )
        bottom, top = family_pair("x", k, k)
        w0 = longest_element(2 * k)
        u, v = compose(w0, top), compose(w0, bottom)
        coatoms = coatom_count(u, v)
        with note_lock:
            notes.append(
                f"k={k}: coefficient {coefficient}, coatoms {coatoms}, "
                f"ratio {coefficient / coatoms:.3f}"
            )
        if coefficient > coatoms - 1:
            return Failure(
                f"k={k} bound",
                f"<= {coatoms - 1}",
                str(coefficient),
            )
        return None

    start = time.perf_counter()
    failures = _run_cases(cases, evaluate, cache)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        check="coatom-bound",
        parameter_range=f"2 <= k <= {k_max}",
        cases=len(cases),
        failures=failures,
        millis=millis,
        notes=sorted(notes),
    )
