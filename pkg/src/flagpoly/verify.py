"""Verification suites: symbolic identities ("appendix") and symbolic vs.
brute-force comparisons ("oracle").

Each check yields a JSON-serialisable record
``{check, parameters, symbolic, oracle, equal}``.  Records with
``"monitor": true`` track properties that are expected but not guaranteed;
they are reported but never fail a run.
"""

from __future__ import annotations

import itertools
import logging
from typing import Iterable, Iterator, Sequence

from flagpoly import flagcount, fforacle, grouporders
from flagpoly.errors import ResourceLimit
from flagpoly.flagcount import borel_dims, dims_from_blocks
from flagpoly.polyring import ZERO, Polynomial, Q, exact_div, shift_to_qminus1_basis, to_text
from flagpoly.qcombinatorics import (
    Partition,
    compositions,
    count_avoiding_subspaces,
    gaussian_binomial,
    partitions,
)
from flagpoly.table1 import TABLE1_LATEX, reference_polynomial

log = logging.getLogger(__name__)


def record(check: str, parameters: dict, symbolic, oracle, equal: bool | None = None, **extra) -> dict:
    if isinstance(symbolic, Polynomial):
        symbolic = to_text(symbolic)
    if isinstance(oracle, Polynomial):
        oracle = to_text(oracle)
    rec = {
        "check": check,
        "parameters": parameters,
        "symbolic": symbolic,
        "oracle": oracle,
        "equal": (symbolic == oracle) if equal is None else bool(equal),
    }
    rec.update(extra)
    return rec


def _parts(pi: Partition) -> list[int]:
    return list(pi.parts)


# symbolic identities -------------------------------------------------------------


def check_conservation(max_n: int) -> Iterator[dict]:
    for n in range(max_n + 1):
        for pi in partitions(n):
            for c in range(pi.length + 1):
                total = ZERO
                for pi2 in partitions(n - c):
                    total = total + flagcount.w_count(pi, pi2)
                yield record(
                    "conservation",
                    {"partition": _parts(pi), "c": c},
                    total,
                    gaussian_binomial(pi.length, c),
                )


def check_table1(max_n: int) -> Iterator[dict]:
    for n in range(2, min(max_n, max(TABLE1_LATEX)) + 1):
        yield record(
            "table1",
            {"n": n},
            grouporders.k_poly(n, (1,) * n, "pgl"),
            reference_polynomial(n),
        )


def check_borel_column_sums(max_n: int) -> Iterator[dict]:
    for n in range(2, min(max_n, max(TABLE1_LATEX)) + 1):
        cache: dict = {}
        total = ZERO
        for pi in partitions(n):
            total = total + flagcount.f_count(pi, borel_dims(n), cache)
        yield record(
            "borel_column_sum",
            {"n": n},
            total,
            exact_div(reference_polynomial(n), (Q - 1) ** (n - 1)),
        )


def check_subregular(max_n: int) -> Iterator[dict]:
    for n in range(2, max_n + 1):
        pi = Partition((n - 1, 1)) if n > 1 else Partition((1,))
        yield record(
            "subregular",
            {"n": n},
            flagcount.f_count(pi, borel_dims(n)),
            Polynomial([1, n - 1]),
        )


def check_gl_pgl_factor(max_n: int) -> Iterator[dict]:
    for n in range(2, max_n + 1):
        blocks = (1,) * n
        cache: dict = {}
        yield record(
            "gl_pgl_factor",
            {"n": n},
            grouporders.k_poly(n, blocks, "gl", cache),
            (Q - 1) * grouporders.k_poly(n, blocks, "pgl", cache),
        )


def _distinct_permutations(blocks: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(itertools.permutations(blocks)))


def check_invariance(max_n: int) -> Iterator[dict]:
    """Values depend on the composition only up to reordering the blocks."""
    for n in range(1, max_n + 1):
        seen = set()
        for blocks in compositions(n):
            key = tuple(sorted(blocks, reverse=True))
            if key in seen:
                continue
            seen.add(key)
            perms = _distinct_permutations(blocks)
            base = key
            for pi in partitions(n):
                ref = flagcount.f_count(pi, dims_from_blocks(base))
                for other in perms:
                    yield record(
                        "f_invariance",
                        {"partition": _parts(pi), "blocks": list(other), "reference_blocks": list(base)},
                        flagcount.f_count(pi, dims_from_blocks(other)),
                        ref,
                    )
            for flavor in ("gl", "pgl"):
                ref = grouporders.k_poly(n, base, flavor)
                for other in perms:
                    yield record(
                        "k_invariance",
                        {"n": n, "blocks": list(other), "reference_blocks": list(base), "flavor": flavor},
                        grouporders.k_poly(n, other, flavor),
                        ref,
                    )


def _shapes(max_borel: int, max_all: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for n in range(1, max_all + 1):
        for blocks in compositions(n):
            yield n, blocks
    for n in range(max_all + 1, max_borel + 1):
        yield n, (1,) * n


def check_nonnegativity(max_borel: int, max_all: int) -> Iterator[dict]:
    for n, blocks in _shapes(max_borel, max_all):
        cache: dict = {}
        for pi in partitions(n):
            f = flagcount.f_count(pi, dims_from_blocks(blocks), cache)
            yield record(
                "nonnegative_coefficients",
                {"partition": _parts(pi), "blocks": list(blocks)},
                f,
                None,
                equal=all(c >= 0 for c in f.coeffs),
            )


def check_qminus1_positivity(max_borel: int, max_all: int) -> Iterator[dict]:
    for n, blocks in _shapes(max_borel, max_all):
        for flavor in ("gl", "pgl"):
            k = grouporders.k_poly(n, blocks, flavor)
            shifted = shift_to_qminus1_basis(k)
            ok = all(c >= 0 for c in shifted)
            if not ok:
                log.warning("q-1 positivity violated for n=%d blocks=%s %s", n, blocks, flavor)
            yield record(
                "qminus1_positivity",
                {"n": n, "blocks": list(blocks), "flavor": flavor},
                list(shifted),
                None,
                equal=ok,
                monitor=True,
            )


def appendix_suite(max_n: int = 6) -> Iterator[dict]:
    small = min(max_n, 6)
    yield from check_conservation(min(max_n, 8))
    yield from check_table1(max_n)
    yield from check_borel_column_sums(max_n)
    yield from check_subregular(max_n)
    yield from check_gl_pgl_factor(max_n)
    yield from check_invariance(small)
    yield from check_nonnegativity(max_n, small)
    yield from check_qminus1_positivity(max_n, small)


# symbolic vs brute force ---------------------------------------------------------


def _guard(check: str, parameters: dict, compute) -> dict:
    try:
        return compute()
    except ResourceLimit as exc:
        return {"check": check, "parameters": parameters, "refused": str(exc), "equal": None}


def check_subspace_counts(max_n: int, primes: Iterable[int]) -> Iterator[dict]:
    for p in primes:
        for n in range(max_n + 1):
            for k in range(n + 1):
                params = {"n": n, "k": k, "p": p}
                yield _guard("subspace_count", params, lambda: record(
                    "subspace_count", params,
                    gaussian_binomial(n, k)(p),
                    sum(1 for _ in fforacle.enumerate_subspaces(n, k, p)),
                ))


def brute_avoiding_count(n: int, m: int, l: int, p: int) -> int:
    """``l``-subspaces of F_p^n meeting the span of the first ``m`` unit
    vectors trivially, by enumeration."""
    fixed = fforacle.EchelonSubspace.span(
        n, [tuple(int(i == j) for i in range(n)) for j in range(m)], p
    )
    count = 0
    for u in fforacle.enumerate_subspaces(n, l, p):
        joined = fforacle.EchelonSubspace.span(n, list(fixed.basis) + list(u.basis), p)
        if joined.dim == m + l:
            count += 1
    return count


def check_avoiding(max_n: int, primes: Iterable[int]) -> Iterator[dict]:
    for p in primes:
        for n in range(max_n + 1):
            for m in range(n + 1):
                for l in range(n + 1):
                    params = {"n": n, "m": m, "l": l, "p": p}
                    yield _guard("avoiding_subspaces", params, lambda: record(
                        "avoiding_subspaces", params,
                        count_avoiding_subspaces(n, m, l)(p),
                        brute_avoiding_count(n, m, l, p),
                    ))


def check_w_oracle(max_n: int, primes: Iterable[int]) -> Iterator[dict]:
    for p in primes:
        for n in range(1, max_n + 1):
            for pi in partitions(n):
                u = fforacle.unipotent_of_type(pi, p)
                for c in range(pi.length + 1):
                    try:
                        tally = fforacle.oracle_w(u, c, p)
                    except ResourceLimit as exc:
                        yield {"check": "w_oracle", "parameters": {"partition": _parts(pi), "c": c, "p": p},
                               "refused": str(exc), "equal": None}
                        continue
                    for pi2 in partitions(n - c):
                        yield record(
                            "w_oracle",
                            {"partition": _parts(pi), "quotient": _parts(pi2), "p": p},
                            flagcount.w_count(pi, pi2)(p),
                            tally.get(pi2, 0),
                        )


def check_f_oracle(max_n: int, primes: Iterable[int]) -> Iterator[dict]:
    for p in primes:
        for n in range(1, max_n + 1):
            for blocks in compositions(n):
                d = dims_from_blocks(blocks)
                cache: dict = {}
                for pi in partitions(n):
                    params = {"partition": _parts(pi), "blocks": list(blocks), "p": p}
                    yield _guard("f_oracle", params, lambda: record(
                        "f_oracle", params,
                        flagcount.f_count(pi, d, cache)(p),
                        fforacle.oracle_f_radical(fforacle.unipotent_of_type(pi, p), d, p),
                    ))


def check_k_oracle(max_n: int, primes: Iterable[int], flavors=("gl", "pgl")) -> Iterator[dict]:
    for p in primes:
        for n in range(1, max_n + 1):
            for blocks in compositions(n):
                for flavor in flavors:
                    params = {"n": n, "blocks": list(blocks), "p": p, "flavor": flavor}
                    yield _guard("k_oracle", params, lambda: record(
                        "k_oracle", params,
                        grouporders.k_poly(n, blocks, flavor)(p),
                        fforacle.oracle_k(n, blocks, p, flavor),
                    ))


def check_sl3(primes: Iterable[int]) -> Iterator[dict]:
    for p in primes:
        cong = grouporders.sl3_congruence(p)
        params = {"p": p, "congruence": cong}
        yield _guard("sl3_oracle", params, lambda: record(
            "sl3_oracle", params,
            grouporders.k_sl3(cong)(p),
            fforacle.oracle_k(3, (1, 1, 1), p, "sl"),
        ))


def check_lemma1(cases: Iterable[tuple[int, int]]) -> Iterator[dict]:
    for n, p in cases:
        params = {"n": n, "p": p, "blocks": [1] * n}
        yield _guard("lemma1", params, lambda: fforacle.verify_lemma1(n, p))


def check_g_interpolation(max_n: int, primes: Sequence[int], extra: int) -> Iterator[dict]:
    """Interpolate the stable-flag count from ``primes`` and compare the
    result at the held-out prime ``extra`` with a fresh enumeration."""
    for n in range(1, max_n + 1):
        d = borel_dims(n)
        for pi in partitions(n):
            params = {"partition": _parts(pi), "blocks": [1] * n, "primes": list(primes), "extra": extra}

            def run():
                g = fforacle.interpolate_g_poly(pi, d, primes)
                return record(
                    "g_interpolation", params,
                    g(extra),
                    fforacle.oracle_f_parabolic(fforacle.unipotent_of_type(pi, extra), d, extra),
                    polynomial=to_text(g),
                    constant_term=g[0],
                )

            yield _guard("g_interpolation", params, run)


def oracle_suite(max_n: int = 3, primes: Sequence[int] = (2, 3, 5)) -> Iterator[dict]:
    primes = tuple(primes)
    yield from check_subspace_counts(min(max_n, 4), primes)
    yield from check_avoiding(min(max_n, 4), [p for p in primes if p <= 3])
    yield from check_w_oracle(min(max_n, 4), primes)
    yield from check_f_oracle(min(max_n, 4), primes)
    yield from check_k_oracle(min(max_n, 3), primes)
    if max_n >= 3:
        yield from check_sl3(primes)
    lemma_cases = [(2, p) for p in primes if p <= 3]
    if max_n >= 3 and 2 in primes:
        lemma_cases.append((3, 2))
    yield from check_lemma1(lemma_cases)
    fit, extra = primes[:-1], primes[-1:]
    # the stable-flag count for the Borel has degree dim G/B = n(n-1)/2
    usable = [n for n in range(1, min(max_n, 3) + 1) if n * (n - 1) // 2 + 1 <= len(fit)]
    if usable and extra:
        yield from check_g_interpolation(max(usable), fit, extra[0])


def run_suite(suite: str, max_n: int, primes: Sequence[int]) -> Iterator[dict]:
    if suite in ("appendix", "all"):
        yield from appendix_suite(max_n)
    if suite in ("oracle", "all"):
        yield from oracle_suite(max_n, primes)


def summarize(records: Iterable[dict]) -> tuple[int, int, int]:
    """``(failures, refusals, total)``; monitor records never count as failures."""
    failures = refusals = total = 0
    for rec in records:
        total += 1
        if "refused" in rec:
            refusals += 1
        elif not rec["equal"] and not rec.get("monitor"):
            failures += 1
    return failures, refusals, total


def exit_code(failures: int, refusals: int) -> int:
    if failures:
        return 1
    if refusals:
        return 3
    return 0
