"""Binary sequence constructions from Legendre symbols of polynomials.

Three generators: a single-polynomial sequence, a three-polynomial
filtered sequence (the switching polynomial h selects between f and g),
and a generic combiner that interleaves two arbitrary sequences under a
third.  Sequences take values in {-1, +1}; indices are 1-based on every
external surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ff import Poly, QnrSet, legendre, legendre_table


@dataclass(frozen=True)
class BinarySequence:
    """A +-1 sequence of length N >= 1 with provenance metadata."""

    values: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("empty sequence")
        if any(v not in (-1, 1) for v in self.values):
            raise ValueError("sequence entries must be -1 or +1")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    def __neg__(self) -> "BinarySequence":
        return BinarySequence(tuple(-v for v in self.values))

    def body(self) -> str:
        return "".join("+" if v == 1 else "-" for v in self.values)

    def header(self) -> str:
        p = self.meta.get("p")
        if p is None:
            return f"#LEGSEQ v1 n={self.n}"
        return f"#LEGSEQ v1 p={p} n={self.n}"

    def dumps(self) -> str:
        return self.header() + "\n" + self.body() + "\n"

    @staticmethod
    def loads(text: str) -> "BinarySequence":
        lines = text.splitlines()
        if len(lines) < 2 or not lines[0].startswith("#LEGSEQ v1"):
            raise ValueError("not a LEGSEQ v1 file")
        fields = {}
        for tok in lines[0].split()[2:]:
            key, _, val = tok.partition("=")
            fields[key] = int(val)
        if "n" not in fields:
            raise ValueError("missing n= in header")
        body = lines[1]
        if len(body) != fields["n"]:
            raise ValueError("body length does not match header")
        if set(body) - {"+", "-"}:
            raise ValueError("sequence body must use only '+' and '-'")
        meta = {"p": fields["p"]} if "p" in fields else {}
        return BinarySequence(
            tuple(1 if ch == "+" else -1 for ch in body), meta
        )

    @staticmethod
    def load(path) -> "BinarySequence":
        with open(path, "r", encoding="ascii") as fh:
            return BinarySequence.loads(fh.read())

    def dump(self, path):
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.dumps())


@dataclass(frozen=True)
class PolyTriple:
    """Three polynomials f, g, h over a shared prime modulus."""

    f: Poly
    g: Poly
    h: Poly

    def __post_init__(self):
        if not (self.f.p == self.g.p == self.h.p):
            raise ValueError("mismatched moduli")
        for poly in (self.f, self.g, self.h):
            if poly.degree < 1:
                raise ValueError("constant polynomial")

    @property
    def p(self) -> int:
        return self.f.p

    @property
    def max_degree(self) -> int:
        return max(self.f.degree, self.g.degree, self.h.degree)


def construct_single(f: Poly) -> BinarySequence:
    """Length-p sequence e_n = (f(n)/p) for n = 1..p, with +1 when p | f(n)."""
    if f.degree < 1:
        raise ValueError("constant polynomial")
    p = f.p
    table = legendre_table(p)
    vals = []
    for n in range(1, p + 1):
        s = table[f(n)]
        vals.append(s if s else 1)
    return BinarySequence(
        tuple(vals), {"p": p, "construction": 1, "f": str(f)}
    )


def construct_triple(t: PolyTriple) -> BinarySequence:
    """Three-polynomial filtered sequence for n = 1..p.

    Branch precedence: the p | f(n)g(n) case wins; otherwise the symbol
    of h(n) selects f (when in {0, +1}) or g (when -1).
    """
    p = t.p
    table = legendre_table(p)
    vals = []
    for n in range(1, p + 1):
        fv, gv = t.f(n), t.g(n)
        if fv == 0 or gv == 0:
            vals.append(1)
        elif table[t.h(n)] >= 0:
            vals.append(table[fv])
        else:
            vals.append(table[gv])
    return BinarySequence(
        tuple(vals),
        {"p": p, "construction": 2, "f": str(t.f), "g": str(t.g),
         "h": str(t.h)},
    )


def closed_form_element(t: PolyTriple, n: int) -> int:
    """Element value by the selector identity, defined when p does not
    divide f(n)g(n)h(n):

        (1 + (h(n)/p))/2 * (f(n)/p) + (1 - (h(n)/p))/2 * (g(n)/p)
    """
    p = t.p
    fv, gv, hv = t.f(n), t.g(n), t.h(n)
    if fv == 0 or gv == 0 or hv == 0:
        raise ValueError(f"formula undefined at n={n}")
    hs = legendre(hv, p)
    val = (1 + hs) * legendre(fv, p) + (1 - hs) * legendre(gv, p)
    return val // 2


def construct_combined(F: BinarySequence, G: BinarySequence,
                       H: BinarySequence) -> BinarySequence:
    """Interleave F and G under the switch H: e_n = f_n when h_n = +1,
    else g_n."""
    if not (F.n == G.n == H.n):
        raise ValueError("length mismatch")
    vals = tuple(
        f if h == 1 else g for f, g, h in zip(F.values, G.values, H.values)
    )
    return BinarySequence(vals, {"construction": 3})


def build_theorem2_polys(A: QnrSet, B: QnrSet, C: QnrSet) -> PolyTriple:
    """Even squarefree triple from sets of quadratic non-residues:
    f = prod_{n in A} (x^2 - n), likewise g from B and h from C."""
    if not (A.p == B.p == C.p):
        raise ValueError("mismatched moduli")
    p = A.p

    def build(s: QnrSet) -> Poly:
        poly = Poly.make((1,), p)
        for n in sorted(s.elements):
            poly = poly * Poly.make((-n, 0, 1), p)
        return poly

    return PolyTriple(build(A), build(B), build(C))
