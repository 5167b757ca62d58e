"""Trace coordinates for quadruples in G(t)^4: the 11-coordinate embedding,
s-coordinates of traceless parts, Gram matrices, the 20 definitive relations
of the rank-4 free group, and the knot-specific trace-equation battery.

Residual functions return raw complex values by default; with
``normalized=True`` each residual is divided by max(1, largest monomial
magnitude), which is what the acceptance thresholds are stated against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentS0, TraceMismatch
from .mat2 import Mat2

PAIR_KEYS = ("t12", "t23", "t34", "t14", "t13", "t24")
TRIPLE_KEYS = ("t123", "t124", "t134", "t234")
COORD_KEYS = ("t",) + PAIR_KEYS + TRIPLE_KEYS

#: ascending index pairs / triples in 1..4
PAIRS = ((1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4))
TRIPLES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def _pkey(i: int, j: int) -> str:
    i, j = sorted((i, j))
    return f"t{i}{j}"


def _tkey(i: int, j: int, k: int) -> str:
    i, j, k = sorted((i, j, k))
    return f"t{i}{j}{k}"


@dataclass(frozen=True, slots=True)
class TraceVector:
    """Candidate character of the 4-generator group, embedded in C^11."""

    t: complex
    t12: complex
    t23: complex
    t34: complex
    t14: complex
    t13: complex
    t24: complex
    t123: complex
    t124: complex
    t134: complex
    t234: complex

    def pair(self, i: int, j: int) -> complex:
        return getattr(self, _pkey(i, j))

    def triple(self, i: int, j: int, k: int) -> complex:
        # only cyclic rotations of ascending triples occur in this package,
        # so the sorted key is always the right trace
        return getattr(self, _tkey(i, j, k))

    def coords(self) -> dict[str, complex]:
        return {k: getattr(self, k) for k in COORD_KEYS}

    def rotate(self) -> "TraceVector":
        """Image under the order-4 subscript rotation i -> i+1 (mod 4)."""
        return TraceVector(
            t=self.t,
            t12=self.t23, t23=self.t34, t34=self.t14, t14=self.t12,
            t13=self.t24, t24=self.t13,
            t123=self.t234, t124=self.t123, t134=self.t124, t234=self.t134)

    def max_dev(self, other: "TraceVector") -> float:
        return max(abs(getattr(self, k) - getattr(other, k))
                   for k in COORD_KEYS)

    def to_json(self):
        return {k: [getattr(self, k).real, getattr(self, k).imag]
                for k in COORD_KEYS}

    @classmethod
    def from_json(cls, obj) -> "TraceVector":
        return cls(**{k: complex(*obj[k]) for k in COORD_KEYS})


def rotate(v: TraceVector) -> TraceVector:
    return v.rotate()


@dataclass(frozen=True, slots=True)
class SCoords:
    """Pair/triple traces of the traceless parts; diagonal value is s0."""

    s0: complex
    s12: complex
    s23: complex
    s34: complex
    s14: complex
    s13: complex
    s24: complex
    s123: complex
    s124: complex
    s134: complex
    s234: complex

    def pair(self, i: int, j: int) -> complex:
        if i == j:
            return self.s0
        i, j = sorted((i, j))
        return getattr(self, f"s{i}{j}")

    def triple(self, i: int, j: int, k: int) -> complex:
        i, j, k = sorted((i, j, k))
        return getattr(self, f"s{i}{j}{k}")


def s_from_t(v: TraceVector) -> SCoords:
    """s0 = t^2/2 - 2, s_ij = t_ij - t^2/2, and the triple-trace shift."""
    t = v.t
    h = t * t / 2
    vals = {"s0": h - 2}
    for (i, j) in PAIRS:
        vals[f"s{i}{j}"] = v.pair(i, j) - h
    for (i, j, k) in TRIPLES:
        vals[f"s{i}{j}{k}"] = (v.triple(i, j, k)
                               - (t / 2) * (v.pair(i, j) + v.pair(j, k)
                                            + v.pair(i, k))
                               + t ** 3 / 2)
    return SCoords(**vals)


def t_from_s(s: SCoords, t: complex) -> TraceVector:
    """Invert s_from_t for a given t; s0 must match t^2/2 - 2."""
    h = t * t / 2
    if abs(s.s0 - (h - 2)) > 1e-9 * max(1.0, abs(h)):
        raise InconsistentS0(f"s0 = {s.s0}, expected {h - 2}")
    pv = {f"t{i}{j}": s.pair(i, j) + h for (i, j) in PAIRS}
    tv = {}
    for (i, j, k) in TRIPLES:
        tv[f"t{i}{j}{k}"] = (s.triple(i, j, k)
                             + (t / 2) * (pv[_pkey(i, j)] + pv[_pkey(j, k)]
                                          + pv[_pkey(i, k)])
                             - t ** 3 / 2)
    return TraceVector(t=t, **pv, **tv)


@dataclass(frozen=True)
class GramData:
    """3x3 Gram matrices per ascending triple plus the full 4x4 matrix,
    as nested tuples of complex."""

    S123: tuple
    S124: tuple
    S134: tuple
    S234: tuple
    Sdiamond: tuple


def gram_matrices(s: SCoords) -> GramData:
    def block(idx):
        return tuple(tuple(s.pair(i, j) for j in idx) for i in idx)

    return GramData(S123=block((1, 2, 3)), S124=block((1, 2, 4)),
                    S134=block((1, 3, 4)), S234=block((2, 3, 4)),
                    Sdiamond=block((1, 2, 3, 4)))


def _det3_terms(m) -> list[complex]:
    """The six signed monomials of a 3x3 determinant."""
    return [m[0][0] * m[1][1] * m[2][2],
            -m[0][0] * m[1][2] * m[2][1],
            -m[0][1] * m[1][0] * m[2][2],
            m[0][1] * m[1][2] * m[2][0],
            m[0][2] * m[1][0] * m[2][1],
            -m[0][2] * m[1][1] * m[2][0]]


def _finish(terms: list[complex], normalized: bool) -> complex:
    val = sum(terms)
    if not normalized:
        return val
    return val / max(1.0, max(abs(x) for x in terms))


def typeI_residuals(s: SCoords, normalized: bool = False) -> list[complex]:
    """The 16 relations 2 s_I s_J + det((s_{i_a j_b})) over ordered pairs of
    ascending triples; universal identities on genuine quadruples."""
    out = []
    for I in TRIPLES:
        for J in TRIPLES:
            m = [[s.pair(a, b) for b in J] for a in I]
            terms = [2 * s.triple(*I) * s.triple(*J)] + _det3_terms(m)
            out.append(_finish(terms, normalized))
    return out


def typeII_residuals(s: SCoords, normalized: bool = False) -> list[complex]:
    """The four relations s_i1 s234 - s_i2 s134 + s_i3 s124 - s_i4 s123."""
    out = []
    for i in (1, 2, 3, 4):
        terms = [s.pair(i, 1) * s.s234, -s.pair(i, 2) * s.s134,
                 s.pair(i, 3) * s.s124, -s.pair(i, 4) * s.s123]
        out.append(_finish(terms, normalized))
    return out


def det_Sdiamond(s: SCoords, normalized: bool = False) -> complex:
    """Determinant of the 4x4 Gram matrix; vanishes on genuine quadruples."""
    m = gram_matrices(s).Sdiamond
    terms = []
    for j in range(4):
        minor = [[m[r][c] for c in range(4) if c != j] for r in (1, 2, 3)]
        sign = -1 if j % 2 else 1
        terms.extend(sign * m[0][j] * x for x in _det3_terms(minor))
    return _finish(terms, normalized)


def _shift(i: int, p: int) -> int:
    return (i - 1 + p) % 4 + 1


def _eq_terms(v: TraceVector, p: int) -> list[list[complex]]:
    """Monomial lists for the three base trace equations at rotation p."""
    t = v.t
    i1, i2, i3, i4 = (_shift(i, p) for i in (1, 2, 3, 4))
    t12 = v.pair(i1, i2)
    t13, t14 = v.pair(i1, i3), v.pair(i1, i4)
    t23, t24 = v.pair(i2, i3), v.pair(i2, i4)
    t123 = v.triple(i1, i2, i3)
    t124 = v.triple(i1, i2, i4)
    a = t * t - 1
    tr0 = [a * t124, -a * t123, t * t13, -t * t24,
           -t * (t12 - 1) * t14, t * (t12 - 1) * t23]
    c1 = t * (t12 + t * t - 2)
    c2 = t12 + t * t - 1
    c3 = t12 * t12 + a * t12 - t * t - 1
    tr12m = [c1 * t124, -c1 * t123, c2 * t13, -c2 * t24, -c3 * t14, c3 * t23]
    d1 = t * (t * t - 2 - t12)
    d2 = t12 + 1 - t * t
    d3 = 1 - t12 * t12 + a * t12 - t * t
    tr12p = [d1 * t124, d1 * t123, d2 * t13, d2 * t24, -d3 * t14, -d3 * t23]
    return [tr0, tr12m, tr12p]


def trace_equation_residuals(v: TraceVector,
                             normalized: bool = False) -> list[complex]:
    """Twelve residuals, ordered (position 1..4) x (tr0, tr1-tr2, tr1+tr2).

    They vanish exactly when the character-level necessary conditions for
    relator equality hold at every rotation.
    """
    return [_finish(terms, normalized)
            for p in range(4) for terms in _eq_terms(v, p)]


def eq19_residuals(v: TraceVector, normalized: bool = False) -> list[complex]:
    """The redundant fourth equation at each rotation; identically equal to
    t*(tr1-tr2) - t^2*tr0, kept as an independent cross-check."""
    t = v.t
    out = []
    for p in range(4):
        i1, i2, i3, i4 = (_shift(i, p) for i in (1, 2, 3, 4))
        t12 = v.pair(i1, i2)
        terms = [t * t * (t12 - 1) * v.triple(i1, i2, i4),
                 -t * t * (t12 - 1) * v.triple(i1, i2, i3),
                 t * (t12 - 1) * v.pair(i1, i3),
                 -t * (t12 - 1) * v.pair(i2, i4),
                 -t * (t12 * t12 - t12 - 1) * v.pair(i1, i4),
                 t * (t12 * t12 - t12 - 1) * v.pair(i2, i3)]
        out.append(_finish(terms, normalized))
    return out


def trace_vector_of(x1: Mat2, x2: Mat2, x3: Mat2, x4: Mat2) -> TraceVector:
    """The 11 trace coordinates of a quadruple sharing a common trace."""
    xs = (x1, x2, x3, x4)
    t = x1.trace()
    for m in xs[1:]:
        if abs(m.trace() - t) > 1e-9 * max(1.0, abs(t)):
            raise TraceMismatch(f"traces {t} vs {m.trace()}")

    def tr(*idx):
        m = xs[idx[0] - 1]
        for i in idx[1:]:
            m = m @ xs[i - 1]
        return m.trace()

    return TraceVector(
        t=t,
        t12=tr(1, 2), t23=tr(2, 3), t34=tr(3, 4), t14=tr(1, 4),
        t13=tr(1, 3), t24=tr(2, 4),
        t123=tr(1, 2, 3), t124=tr(1, 2, 4), t134=tr(1, 3, 4), t234=tr(2, 3, 4))
