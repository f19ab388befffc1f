"""Exact and sampled pseudorandomness measures of binary sequences.

Implements the well-distribution measure W, the order-l correlation
measure C_l, a seeded sampling estimator for infeasible exact cases, and
the family cross-correlation measure Phi_l.  Every exact result carries
a deterministic witness (the argmax tuple) that re-evaluates to the
reported value; ties are broken toward the lexicographically smallest
witness, so results are independent of evaluation schedule.

Brute-force definitional oracles (no algebraic shortcuts) are provided
for small sequences and are used only by tests.
"""

from __future__ import annotations

import time
from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Optional

import numpy as np

from .constructions import BinarySequence

DEFAULT_BUDGET = 2**34
DEFAULT_SEED = 0x1E65_5EED

_ORACLE_LIMIT = 64


class BudgetExceeded(RuntimeError):
    """Exact enumeration would exceed the configured work budget; use the
    sampled estimator instead."""


@dataclass(frozen=True)
class MeasureResult:
    """A measure value with its witness and provenance.

    name is "W", "C" or "Phi"; order is None for W.  For sampled results
    the value is a lower bound on the exact measure and seed/samples
    record the draw.
    """

    name: str
    order: Optional[int]
    value: int
    witness: tuple
    method: str = "exact"
    samples: Optional[int] = None
    seed: Optional[int] = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "value": self.value,
            "method": self.method,
            "seed": self.seed,
            "witness": list(self.witness),
        }


def evaluate_w_witness(E: BinarySequence, a: int, b: int, t: int) -> int:
    """|sum_{j=1..t} e_{a+jb}| straight from the definition."""
    if not (b >= 1 and t >= 1 and 1 <= a + b and a + t * b <= E.n):
        raise ValueError("invalid well-distribution witness")
    return abs(sum(E[a + j * b - 1] for j in range(1, t + 1)))


def evaluate_corr_witness(E: BinarySequence, D: tuple, M: int) -> int:
    """|sum_{n=1..M} e_{n+d_1} ... e_{n+d_l}| straight from the definition."""
    if len(D) < 1 or any(x >= y for x, y in zip(D, D[1:])):
        raise ValueError("lags must be strictly increasing")
    if not (D[0] >= 0 and M >= 1 and M + D[-1] <= E.n):
        raise ValueError("invalid correlation witness")
    s = 0
    for n in range(1, M + 1):
        prod = 1
        for d in D:
            prod *= E[n + d - 1]
        s += prod
    return abs(s)


def evaluate_cross_witness(family, indices: tuple, D: tuple, M: int) -> int:
    """|V_l| for the given member indices (1-based) and nondecreasing D."""
    if len(indices) != len(D):
        raise ValueError("indices and D must have equal length")
    seqs = [family[i - 1] for i in indices]
    N = seqs[0].n
    if any(x > y for x, y in zip(D, D[1:])) or D[0] < 0:
        raise ValueError("lags must be nondecreasing")
    if not (M >= 1 and M + D[-1] <= N):
        raise ValueError("invalid cross-correlation witness")
    for i in range(len(seqs)):
        for j in range(i + 1, len(seqs)):
            if seqs[i].values == seqs[j].values and D[i] == D[j]:
                raise ValueError("equal sequences must not share a lag")
    s = 0
    for n in range(1, M + 1):
        prod = 1
        for seq, d in zip(seqs, D):
            prod *= seq[n + d - 1]
        s += prod
    return abs(s)


def _level_index(prefix) -> dict:
    """Map prefix-sum level -> sorted list of indices where it occurs."""
    levels: dict = {}
    for i, v in enumerate(prefix):
        levels.setdefault(int(v), []).append(i)
    return levels


def _first_window(prefix, value):
    """Smallest (start, length) with |prefix[start+length] - prefix[start]|
    equal to value, ordering by start first, then length.  Returns None
    when the value is not attained."""
    levels = _level_index(prefix)
    for i in range(len(prefix) - 1):
        base = int(prefix[i])
        best_j = None
        for target in (base + value, base - value):
            idxs = levels.get(target)
            if not idxs:
                continue
            k = bisect_right(idxs, i)
            if k < len(idxs) and (best_j is None or idxs[k] < best_j):
                best_j = idxs[k]
        if best_j is not None:
            return i, best_j - i
    return None


def well_distribution(E: BinarySequence, threads: int = 1) -> MeasureResult:
    """Exact W(E): max |sum along an arithmetic progression inside [1, N]|.

    For each difference b the positions split into b progressions;
    max prefix minus min prefix along each covers every (a, t) choice.
    O(N^2) overall.  The witness is the smallest (b, a, t) attaining the
    value.
    """
    t0 = time.perf_counter()
    e = E.array()
    N = E.n
    per_b = _w_values_per_b(e, range(1, N + 1), threads=threads)
    value = int(max(per_b.values()))

    b_star = min(b for b, v in per_b.items() if v == value)
    best = None  # (a, t)
    prefixes = _class_prefixes(e, b_star)
    for c in range(b_star):
        hit = _first_window(prefixes[c], value)
        if hit is None:
            continue
        i, length = hit
        a = (c + 1) + i * b_star - b_star
        if best is None or (a, length) < best:
            best = (a, length)
    a, t = best
    return MeasureResult("W", None, value, (a, b_star, t),
                         elapsed=time.perf_counter() - t0)


def _class_prefixes(e, b):
    """Prefix sums (with leading 0) of each residue class of step b."""
    N = len(e)
    m = -(-N // b)
    pad = np.zeros(m * b, dtype=np.int64)
    pad[:N] = e
    cols = pad.reshape(m, b)
    P = np.vstack([np.zeros((1, b), dtype=np.int64), np.cumsum(cols, axis=0)])
    out = []
    for c in range(b):
        k = (N - c + b - 1) // b  # elements in class c
        out.append(P[: k + 1, c])
    return out


def _chunks(seq, k):
    seq = list(seq)
    step = -(-len(seq) // k)
    return [seq[i: i + step] for i in range(0, len(seq), step)]


def _w_values_per_b(e, bs, threads: int = 1) -> dict:
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda c: _w_values_per_b(e, c), _chunks(bs, threads))
        out = {}
        for part in parts:
            out.update(part)
        return out
    N = len(e)
    out = {}
    for b in bs:
        m = -(-N // b)
        pad = np.zeros(m * b, dtype=np.int64)
        pad[:N] = e
        cols = pad.reshape(m, b)
        P = np.vstack(
            [np.zeros((1, b), dtype=np.int64), np.cumsum(cols, axis=0)]
        )
        # zero padding repeats the last prefix value, so max-min is exact
        out[b] = int((P.max(axis=0) - P.min(axis=0)).max())
    return out


def _lag_products(e, lags):
    """Product sequence a_m = e_m * e_{m+lag_2} * ... (0-based slicing)."""
    N = len(e)
    span = lags[-1] if lags else 0
    a = e[: N - span].copy()
    for d in lags:
        a *= e[d: N - span + d]
    return a


def _corr_tuple_count(N: int, order: int) -> int:
    return comb(N - 1, order - 1)


def correlation(E: BinarySequence, order: int,
                budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> MeasureResult:
    """Exact C_l(E) by lag enumeration.

    The sum over n = 1..M with lags D equals a contiguous window sum of
    the product sequence with relative lags d_i - d_1, so scanning
    max prefix minus min prefix per lag tuple is exact.  Refuses when
    (number of lag tuples) * N exceeds the work budget.
    """
    t0 = time.perf_counter()
    if order < 2:
        raise ValueError("correlation order must be >= 2")
    N = E.n
    if order >= N:
        raise ValueError("correlation order must be below the length")
    if _corr_tuple_count(N, order) * N > budget:
        raise BudgetExceeded(
            f"exact C_{order} needs {_corr_tuple_count(N, order) * N} steps "
            f"(budget {budget}); use correlation_sampled"
        )
    e = E.array()

    def scan(chunk):
        best = 0
        ach = []
        for lags in chunk:
            a = _lag_products(e, lags)
            P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
            v = int(P.max() - P.min())
            if v > best:
                best = v
                ach = [lags]
            elif v == best:
                ach.append(lags)
        return best, ach

    all_lags = combinations(range(1, N), order - 1)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(scan, _chunks(all_lags, threads)))
    else:
        parts = [scan(all_lags)]
    value = max(v for v, _ in parts)
    # the witness pass below takes a global minimum, so merge order
    # cannot affect the result
    achieving = [lags for v, ach in parts if v == value for lags in ach]

    witness = None  # (D..., M)
    for lags in achieving:
        a = _lag_products(e, lags)
        P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
        hit = _first_window(P, value)
        if hit is None:
            continue
        start, M = hit
        cand = tuple([start] + [start + d for d in lags]) + (M,)
        if witness is None or cand < witness:
            witness = cand
    D, M = witness[:-1], witness[-1]
    return MeasureResult("C", order, value, (D, M),
                         elapsed=time.perf_counter() - t0)


class SplitMix64:
    """64-bit mixing generator (splitmix64); deterministic for a seed."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        # rejection sampling keeps the draw exactly uniform
        lim = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next()
            if x < lim:
                return x % n

    def lag_tuple(self, N: int, order: int) -> tuple:
        """Uniform strictly increasing (order-1)-subset of [1, N-1]."""
        chosen: set = set()
        while len(chosen) < order - 1:
            chosen.add(1 + self.below(N - 1))
        return tuple(sorted(chosen))


def correlation_sampled(E: BinarySequence, order: int, samples: int,
                        seed: int = DEFAULT_SEED) -> MeasureResult:
    """Lower bound on C_l from `samples` uniformly drawn lag tuples, each
    scanned exactly over all windows.  Deterministic for a fixed seed."""
    t0 = time.perf_counter()
    if order < 2:
        raise ValueError("correlation order must be >= 2")
    N = E.n
    if order >= N:
        raise ValueError("correlation order must be below the length")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    total = _corr_tuple_count(N, order)
    if samples >= total:
        exact = correlation(E, order)
        return MeasureResult("C", order, exact.value, exact.witness,
                             method="sampled", samples=samples, seed=seed,
                             elapsed=time.perf_counter() - t0)
    rng = SplitMix64(seed)
    e = E.array()
    value = -1
    best_lags = None
    for _ in range(samples):
        lags = rng.lag_tuple(N, order)
        a = _lag_products(e, lags)
        P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
        v = int(P.max() - P.min())
        if v > value or (v == value and lags < best_lags):
            value, best_lags = v, lags
    a = _lag_products(e, best_lags)
    P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
    start, M = _first_window(P, value)
    witness = (tuple([start] + [start + d for d in best_lags]), M)
    return MeasureResult("C", order, value, witness, method="sampled",
                         samples=samples, seed=seed,
                         elapsed=time.perf_counter() - t0)


def _nondecreasing_lags(N: int, order: int):
    """Nondecreasing (order-1)-tuples over [0, N-1] (relative to d_1 = 0)."""
    return combinations_with_replacement_range(N, order - 1)


def combinations_with_replacement_range(N, k):
    from itertools import combinations_with_replacement

    return combinations_with_replacement(range(N), k)


def _cross_tuple_count(m: int, N: int, order: int) -> int:
    return m**order * comb(N + order - 2, order - 1)


def cross_correlation(family, order: int,
                      budget: int = DEFAULT_BUDGET) -> MeasureResult:
    """Exact Phi_l of a family: max |V_l| over all l-tuples of members
    (with repetition) and nondecreasing lag tuples, excluding choices
    where two equal sequences share a lag.

    Witness is (member indices 1-based, D, M), lexicographically
    smallest.
    """
    t0 = time.perf_counter()
    family = list(family)
    if not family:
        raise ValueError("empty family")
    if order < 1:
        raise ValueError("order must be >= 1")
    N = family[0].n
    if any(s.n != N for s in family):
        raise ValueError("family members must share one length")
    m = len(family)
    if _cross_tuple_count(m, N, order) * N > budget:
        raise BudgetExceeded(
            f"exact Phi_{order} needs about "
            f"{_cross_tuple_count(m, N, order) * N} steps (budget {budget})"
        )
    arrays = [s.array() for s in family]
    # equal-sequence groups drive the distinct-lag restriction
    eq = [[family[i].values == family[j].values for j in range(m)]
          for i in range(m)]

    value = -1
    achieving = []  # (indices, rel_lags)
    for idxs in product(range(m), repeat=order):
        for rel in _nondecreasing_lags(N, order):
            rel = (0,) + rel  # d_1 is absorbed into the window start
            ok = True
            for i in range(order):
                for j in range(i + 1, order):
                    if eq[idxs[i]][idxs[j]] and rel[i] == rel[j]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            span = rel[-1]
            a = arrays[idxs[0]][: N - span].copy()
            for k in range(1, order):
                a = a * arrays[idxs[k]][rel[k]: N - span + rel[k]]
            P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
            v = int(P.max() - P.min())
            if v > value:
                value = v
                achieving = [(idxs, rel)]
            elif v == value:
                achieving.append((idxs, rel))

    witness = None
    for idxs, rel in achieving:
        span = rel[-1]
        a = arrays[idxs[0]][: N - span].copy()
        for k in range(1, order):
            a = a * arrays[idxs[k]][rel[k]: N - span + rel[k]]
        P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
        hit = _first_window(P, value)
        if hit is None:
            continue
        start, M = hit
        cand = (tuple(i + 1 for i in idxs),
                tuple(start + d for d in rel), M)
        if witness is None or cand < witness:
            witness = cand
    return MeasureResult("Phi", order, value, witness,
                         elapsed=time.perf_counter() - t0)


def cross_correlation_sampled(family, order: int, samples: int,
                              seed: int = DEFAULT_SEED) -> MeasureResult:
    """Lower bound on Phi_l from uniformly drawn (member tuple, lag tuple)
    pairs, each scanned exactly over all windows.  Deterministic for a
    fixed seed; draws that violate the distinct-lag restriction are
    redrawn."""
    t0 = time.perf_counter()
    family = list(family)
    if not family:
        raise ValueError("empty family")
    if order < 1:
        raise ValueError("order must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    N = family[0].n
    if any(s.n != N for s in family):
        raise ValueError("family members must share one length")
    m = len(family)
    arrays = [s.array() for s in family]
    eq = [[family[i].values == family[j].values for j in range(m)]
          for i in range(m)]
    rng = SplitMix64(seed)
    value = -1
    best = None
    for _ in range(samples):
        while True:
            idxs = tuple(rng.below(m) for _ in range(order))
            rel = (0,) + tuple(sorted(
                rng.below(N) for _ in range(order - 1)
            ))
            ok = all(
                not (eq[idxs[i]][idxs[j]] and rel[i] == rel[j])
                for i in range(order) for j in range(i + 1, order)
            )
            if ok:
                break
        span = rel[-1]
        a = arrays[idxs[0]][: N - span].copy()
        for k in range(1, order):
            a = a * arrays[idxs[k]][rel[k]: N - span + rel[k]]
        P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
        v = int(P.max() - P.min())
        if v > value or (v == value and (idxs, rel) < best):
            value, best = v, (idxs, rel)
    idxs, rel = best
    span = rel[-1]
    a = arrays[idxs[0]][: N - span].copy()
    for k in range(1, order):
        a = a * arrays[idxs[k]][rel[k]: N - span + rel[k]]
    P = np.concatenate([np.zeros(1, dtype=np.int64), np.cumsum(a)])
    start, M = _first_window(P, value)
    witness = (tuple(i + 1 for i in idxs),
               tuple(start + d for d in rel), M)
    return MeasureResult("Phi", order, value, witness, method="sampled",
                         samples=samples, seed=seed,
                         elapsed=time.perf_counter() - t0)


def oracle_well_distribution(E: BinarySequence) -> MeasureResult:
    """Direct triple loop over the definition of W; tests only."""
    if E.n > _ORACLE_LIMIT:
        raise ValueError(f"oracle limited to N <= {_ORACLE_LIMIT}")
    N = E.n
    value = -1
    witness = None
    for b in range(1, N + 1):
        for a in range(-b + 1, N):
            if a + b < 1:
                continue
            s = 0
            t = 0
            while a + (t + 1) * b <= N:
                t += 1
                s += E[a + t * b - 1]
                if abs(s) > value or (abs(s) == value
                                      and (b, a, t) < witness):
                    value = abs(s)
                    witness = (b, a, t)
    b, a, t = witness
    return MeasureResult("W", None, value, (a, b, t))


def oracle_correlation(E: BinarySequence, order: int) -> MeasureResult:
    """Direct (l+1)-fold loop over the definition of C_l; tests only."""
    if E.n > _ORACLE_LIMIT:
        raise ValueError(f"oracle limited to N <= {_ORACLE_LIMIT}")
    N = E.n
    if not 2 <= order < N:
        raise ValueError("bad order")
    value = -1
    witness = None
    for D in combinations(range(N), order):
        s = 0
        for M in range(1, N - D[-1] + 1):
            prod = 1
            for d in D:
                prod *= E[M + d - 1]
            s += prod
            if abs(s) > value or (abs(s) == value and (D, M) < witness):
                value = abs(s)
                witness = (D, M)
    return MeasureResult("C", order, value, witness)
