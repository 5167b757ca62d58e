"""2x2 complex matrix core: Cayley-Hamilton calculus on the trace-t slice
G(t) of SL(2,C), traceless parts, and irreducibility tests."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated, SingularMatrix
from .numfield import solve_quadratic

SCALAR_TOL = 1e-12
EIGVEC_TOL = 1e-8


@dataclass(frozen=True, slots=True)
class Mat2:
    """Row-major 2x2 complex matrix [[a, b], [c, d]]."""

    a: complex
    b: complex
    c: complex
    d: complex

    def trace(self) -> complex:
        return self.a + self.d

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Mat2":
        dt = self.det()
        if abs(dt) <= 1e-14:
            raise SingularMatrix(f"|det| = {abs(dt):.3e}")
        return Mat2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def norm(self) -> float:
        """Max entry magnitude."""
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def is_scalar(self, tol: float = SCALAR_TOL) -> bool:
        bound = tol * max(1.0, self.norm())
        return (abs(self.b) <= bound and abs(self.c) <= bound
                and abs(self.a - self.d) <= bound)

    def traceless_part(self) -> "Mat2":
        h = self.trace() / 2
        return Mat2(self.a - h, self.b, self.c, self.d - h)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a - other.a, self.b - other.b,
                    self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, z) -> "Mat2":
        z = complex(z)
        return Mat2(self.a * z, self.b * z, self.c * z, self.d * z)

    __rmul__ = __mul__

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def apply(self, v: tuple[complex, complex]) -> tuple[complex, complex]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def to_json(self):
        return [[[self.a.real, self.a.imag], [self.b.real, self.b.imag]],
                [[self.c.real, self.c.imag], [self.d.real, self.d.imag]]]


IDENTITY = Mat2(1, 0, 0, 1)
ZERO = Mat2(0, 0, 0, 0)


def scalar(z) -> Mat2:
    return Mat2(complex(z), 0, 0, complex(z))


def dist(x: Mat2, y: Mat2) -> float:
    return (x - y).norm()


def rel_dist(x: Mat2, y: Mat2) -> float:
    """Entrywise distance relative to the larger operand (floored at 1)."""
    return dist(x, y) / max(1.0, x.norm(), y.norm())


def in_gt(m: Mat2, t: complex, tol: float = 1e-10) -> bool:
    """Membership in G(t) = {x in SL(2,C) : tr(x) = t}."""
    return abs(m.det() - 1) <= tol and abs(m.trace() - t) <= tol


def ch_residual(x: Mat2, t: complex) -> Mat2:
    """x^2 - t x + e, which vanishes on G(t)."""
    return x @ x - t * x + IDENTITY


def xyx_expand(x: Mat2, y: Mat2, t: complex) -> Mat2:
    """xyx - (tr(xy) x + y - t e), which vanishes for x, y in G(t)."""
    return x @ y @ x - ((x @ y).trace() * x + y - scalar(t))


def anticommutator_residual(u: Mat2, v: Mat2) -> Mat2:
    """uv + vu - tr(uv) e for traceless u, v."""
    return u @ v + v @ u - scalar((u @ v).trace())


def triple_trace(u: Mat2, v: Mat2, w: Mat2) -> complex:
    """tr(uvw); alternating in its arguments on traceless input, and zero
    exactly when u, v, w are linearly dependent."""
    return (u @ v @ w).trace()


def _eigenvectors(m: Mat2) -> list[tuple[complex, complex]]:
    """Eigenvectors of a non-scalar 2x2 matrix (one per distinct eigenvalue)."""
    l1, l2 = solve_quadratic(1.0, -m.trace(), m.det())
    lams = [l1] if abs(l1 - l2) <= 1e-8 * max(1.0, abs(l1), abs(l2)) else [l1, l2]
    out = []
    for lam in lams:
        v1 = (m.b, lam - m.a)
        v2 = (lam - m.d, m.c)
        v = v1 if max(abs(v1[0]), abs(v1[1])) >= max(abs(v2[0]), abs(v2[1])) else v2
        n = max(abs(v[0]), abs(v[1]))
        if n == 0:
            continue  # scalar slipped through; caller filters those
        out.append((v[0] / n, v[1] / n))
    return out


def _fixes_span(m: Mat2, v: tuple[complex, complex], tol: float) -> bool:
    w = m.apply(v)
    nw = max(abs(w[0]), abs(w[1]))
    if nw == 0:
        return True
    # component of m v orthogonal to span(v), Hermitian inner product
    ip = w[0] * v[0].conjugate() + w[1] * v[1].conjugate()
    nv2 = abs(v[0]) ** 2 + abs(v[1]) ** 2
    r0 = w[0] - ip / nv2 * v[0]
    r1 = w[1] - ip / nv2 * v[1]
    return max(abs(r0), abs(r1)) / nw <= tol


def has_common_eigenvector(ms, tol: float = EIGVEC_TOL) -> bool:
    """Brute-force reducibility test for a nonempty list of matrices.

    Candidates are the eigenvectors of the first non-scalar matrix; each is
    tested for span invariance under every matrix.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("empty matrix list")
    anchor = next((m for m in ms if not m.is_scalar()), None)
    if anchor is None:
        return True  # scalars fix every line
    for v in _eigenvectors(anchor):
        if all(_fixes_span(m, v, tol) for m in ms):
            return True
    return False


def is_irreducible_pair(x: Mat2, y: Mat2, t: complex | None = None,
                        tol: float = 1e-9) -> bool:
    """Trace criterion for a pair in G(t): tr(xy) outside {2, t^2 - 2}."""
    if t is None:
        t = x.trace()
    txy = (x @ y).trace()
    s = max(1.0, abs(txy), abs(t) ** 2)
    return abs(txy - 2) > tol * s and abs(txy - (t * t - 2)) > tol * s


def lemma25_apply(x1: Mat2, x2: Mat2, x3: Mat2, t: complex) -> str:
    """Commuting-generator conclusion for an irreducible triple with
    tr(u1 u2 u3) = 0 and tr(u1 u3) = eps * s0.

    Returns "commuting" (t = +-2), "equal" (eps = +1) or "inverse" (eps = -1),
    after asserting the corresponding matrix identities.
    """
    u1, u2, u3 = (x.traceless_part() for x in (x1, x2, x3))
    s0 = t * t / 2 - 2
    sc = max(1.0, x1.norm(), x2.norm(), x3.norm())
    if has_common_eigenvector([x1, x2, x3]):
        raise PreconditionViolated("triple is reducible")
    if abs(triple_trace(u1, u2, u3)) > 1e-9 * sc ** 3:
        raise PreconditionViolated("s123 does not vanish")
    s13 = (u1 @ u3).trace()
    if abs(s13 - s0) <= 1e-9 * max(1.0, abs(s0)):
        eps = 1
    elif abs(s13 + s0) <= 1e-9 * max(1.0, abs(s0)):
        eps = -1
    else:
        raise PreconditionViolated("s13 is not +-s0")
    if rel_dist(x1 @ x3, x3 @ x1) > 1e-9:
        raise PreconditionViolated("conclusion failed: x1, x3 do not commute")
    if min(abs(t - 2), abs(t + 2)) <= 1e-6:
        return "commuting"
    target = x1 if eps == 1 else x1.inverse()
    if rel_dist(x3, target) > 1e-9:
        raise PreconditionViolated("conclusion failed: x3 != x1^eps")
    return "equal" if eps == 1 else "inverse"


def random_sl2(rng, spread: float = 1.0) -> Mat2:
    """Random SL(2,C) element with entries O(spread)."""
    while True:
        a, b, c, d = (complex(x, y) * spread for x, y in
                      rng.standard_normal((4, 2)))
        dt = a * d - b * c
        if abs(dt) > 0.3 * spread * spread:
            r = dt ** -0.5
            return Mat2(a * r, b * r, c * r, d * r)


def random_gt(rng, t: complex, spread: float = 1.0) -> Mat2:
    """Random element of G(t): trace t, determinant 1."""
    while True:
        a = complex(*rng.standard_normal(2)) * spread
        b = complex(*rng.standard_normal(2)) * spread
        if abs(b) > 0.1 * spread:
            return Mat2(a, b, (a * (t - a) - 1) / b, t - a)
