"""Newton polytopes, Alexander norms, balance centers, and dual norm balls.

All geometry here is exact: lattice points are integer tuples and every
derived quantity (centers, dual vertices, norms) is a ``Fraction``.  No
floating point is used, so face and cone comparisons downstream are
exact equalities.

Convex hulls are computed by a monotone chain in dimension <= 2 and by
a brute-force extremality test (exact linear programming) in higher
dimension; workloads here are rank 2, so correctness beats generality.
Lower-dimensional point sets are legal: extremality is decided within
the affine hull automatically, since "v lies in the convex hull of the
others" makes no reference to full-dimensionality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly

Point = tuple[int, ...]
QVec = tuple[Fraction, ...]


# --------------------------------------------------------------------------
# Exact convex hulls
# --------------------------------------------------------------------------


def _hull_2d(points: list[Point]) -> list[Point]:
    """Extreme points of a planar point set, counterclockwise from the lex-min.

    Monotone chain with strict turns, so collinear non-extreme points are
    dropped; degenerate (collinear or single-point) inputs yield the
    endpoints only.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o: Point, a: Point, b: Point) -> int:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:  # all points collinear
        return sorted(set(hull))
    return hull


def point_in_hull(v: Sequence[int | Fraction], points: Sequence[Point]) -> bool:
    """Exact test whether v lies in the convex hull of the given points.

    Solves the phase-1 linear program for barycentric coordinates with
    Bland's rule, entirely over Fractions.
    """
    pts = list(points)
    if not pts:
        return False
    dim = len(pts[0])
    # Feasibility of: lambda >= 0, sum lambda = 1, sum lambda * p = v.
    nvars = len(pts)
    rows = [[Fraction(1)] * nvars + [Fraction(1)]]
    for i in range(dim):
        rows.append([Fraction(p[i]) for p in pts] + [Fraction(v[i])])
    return _lp_feasible(rows)


def _lp_feasible(rows: list[list[Fraction]]) -> bool:
    # rows: [coeffs..., rhs]; decide existence of x >= 0 with Ax = b.
    m = len(rows)
    n = len(rows[0]) - 1
    tableau = [row[:] for row in rows]
    for r in range(m):
        if tableau[r][-1] < 0:
            tableau[r] = [-x for x in tableau[r]]
    # Artificial variable r is basic in row r; objective = sum of artificials.
    basis = [n + r for r in range(m)]
    cost = [Fraction(0)] * n
    for r in range(m):
        for j in range(n):
            cost[j] += tableau[r][j]
    obj = sum(t[-1] for t in tableau)

    while True:
        enter = next((j for j in range(n) if cost[j] > 0), None)
        if enter is None:
            return obj == 0
        # Ratio test, Bland tie-break on basis index.
        leave = None
        best: Fraction | None = None
        for r in range(m):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave is None:
            # Unbounded phase-1 objective cannot happen (it is bounded by 0),
            # but guard anyway.
            return False
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        for r in range(m):
            if r != leave and tableau[r][enter]:
                f = tableau[r][enter]
                tableau[r] = [x - f * y for x, y in zip(tableau[r], tableau[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tableau[leave][:-1])]
        obj -= f * tableau[leave][-1]
        basis[leave] = enter


def hull_vertices(points: Sequence[Point]) -> list[Point]:
    """Extreme points of a lattice point set, in canonical order.

    Dimension <= 2 gives the counterclockwise hull cycle starting at the
    lexicographically smallest vertex; higher dimensions give the extreme
    points in lexicographic order.
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        return []
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points must share one ambient dimension")
    if dim <= 1 or len(pts) == 1:
        ends = [pts[0], pts[-1]]
        return [pts[0]] if pts[0] == pts[-1] else ends
    if dim == 2:
        return _hull_2d(pts)
    return [p for p in pts if not point_in_hull(p, [q for q in pts if q != p])]


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of labeled lattice points (the Newton polytope role).

    ``points`` and ``coefficients`` are aligned; ``hull`` is the subset
    of extreme points in canonical order, each of which carries the
    nonzero coefficient of its monomial.
    """

    dim: int
    points: tuple[Point, ...]
    coefficients: tuple[int, ...]
    hull: tuple[Point, ...]

    def coefficient(self, point: Point) -> int:
        return self.coefficients[self.points.index(point)]

    def hull_coefficients(self) -> tuple[int, ...]:
        return tuple(self.coefficient(v) for v in self.hull)


def lattice_polytope(points: Sequence[Point], coefficients: Sequence[int]) -> LatticePolytope:
    if len(points) != len(coefficients):
        raise ValueError("need one coefficient per point")
    if not points:
        raise ValueError("a polytope needs at least one point")
    pts = tuple(tuple(p) for p in points)
    dim = len(pts[0])
    return LatticePolytope(dim, pts, tuple(coefficients), tuple(hull_vertices(pts)))


def newton_polytope(p: LaurentPoly) -> LatticePolytope:
    """Convex hull of the support of p, with coefficients attached.

    >>> a, b = (LaurentPoly.variable(2, i) for i in range(2))
    >>> P = newton_polytope(a**2 * b - a * b - a + 1)
    >>> P.hull
    ((0, 0), (1, 0), (2, 1), (1, 1))
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    support = p.support()
    return lattice_polytope(support, tuple(p.terms[e] for e in support))


# --------------------------------------------------------------------------
# Alexander norm
# --------------------------------------------------------------------------


def alexander_norm(p: LaurentPoly, phi: Sequence[int | Fraction]) -> Fraction:
    """sup over support pairs of phi(g_i - g_j) = max - min of phi on the support.

    A seminorm: nonnegative, positively homogeneous, subadditive.

    >>> a, b = (LaurentPoly.variable(2, i) for i in range(2))
    >>> alexander_norm(a**2 * b - a * b - a + 1, (1, 0))
    Fraction(2, 1)
    """
    if p.is_zero():
        raise ValueError("the Alexander norm of the zero polynomial is undefined")
    if len(phi) != p.nvars:
        raise ValueError("class has wrong dimension")
    values = [sum(Fraction(phi[i]) * e[i] for i in range(p.nvars)) for e in p.terms]
    return max(values) - min(values)


# --------------------------------------------------------------------------
# Balance centers and dual balls
# --------------------------------------------------------------------------


def balance_center(poly: LatticePolytope) -> QVec | None:
    """The point z0 about which the hull is symmetric, or None.

    z0 is the vertex average; the polytope is balanced iff v -> 2*z0 - v
    permutes the hull vertex set.
    """
    n = len(poly.hull)
    z0 = tuple(
        Fraction(sum(v[i] for v in poly.hull), n) for i in range(poly.dim)
    )
    hull_set = set(poly.hull)
    for v in poly.hull:
        image = tuple(2 * z0[i] - v[i] for i in range(poly.dim))
        if any(x.denominator != 1 for x in image) or tuple(int(x) for x in image) not in hull_set:
            return None
    return z0


@dataclass(frozen=True)
class Face:
    """Top-dimensional face of the dual ball attached to a hull vertex v.

    The face is { phi : phi(x - z0) <= 1/2 for all hull x, phi(v - z0) = 1/2 }.
    ``normal`` is v - z0.  In rank 2 with a full-dimensional hull, the
    face is a segment and ``endpoints`` holds its two dual vertices.
    """

    vertex: Point
    normal: QVec
    offset: Fraction
    endpoints: tuple[QVec, QVec] | None


@dataclass(frozen=True)
class NormBall:
    """The dual unit ball: half the classical polytope dual about z0.

    ``vertices`` is the counterclockwise dual vertex cycle, present only
    in rank 2 with a full-dimensional hull (rank 1 gives the two
    interval endpoints).  The face-functional description in ``faces``
    is available in every rank.
    """

    center: QVec
    faces: tuple[Face, ...]
    vertices: tuple[QVec, ...] | None


def _solve2(a: QVec, b: QVec, rhs: Fraction) -> QVec:
    det = a[0] * b[1] - a[1] * b[0]
    if det == 0:
        raise ValueError("degenerate corner: adjacent face normals are parallel")
    x = (rhs * b[1] - a[1] * rhs) / det
    y = (a[0] * rhs - rhs * b[0]) / det
    return (x, y)


def dual_ball(poly: LatticePolytope) -> NormBall:
    """Dual of a balanced polytope, scaled so supporting values are 1/2.

    Faces correspond one-to-one with hull vertices.  Explicit vertex
    geometry is produced in rank <= 2 (full-dimensional hulls only);
    otherwise the functional description alone is returned.
    """
    z0 = balance_center(poly)
    if z0 is None:
        raise ValueError("polytope is not balanced; the dual ball needs a center")
    half = Fraction(1, 2)
    normals = {v: tuple(v[i] - z0[i] for i in range(poly.dim)) for v in poly.hull}

    vertices: tuple[QVec, ...] | None = None
    endpoints: dict[Point, tuple[QVec, QVec]] = {}
    if poly.dim == 1 and len(poly.hull) == 2:
        lo, hi = poly.hull
        h = normals[hi][0]  # = (hi - lo) / 2 > 0
        vertices = ((-half / h,), (half / h,))
        endpoints[hi] = ((half / h,), (half / h,))
        endpoints[lo] = ((-half / h,), (-half / h,))
    elif poly.dim == 2 and len(poly.hull) >= 3:
        cycle = list(poly.hull)  # counterclockwise
        n = len(cycle)
        corner: list[QVec] = []
        for k in range(n):
            v, w = cycle[k], cycle[(k + 1) % n]
            corner.append(_solve2(normals[v], normals[w], half))
        for k, v in enumerate(cycle):
            endpoints[v] = (corner[(k - 1) % n], corner[k])
        for phi in corner:
            assert all(
                sum(phi[i] * normals[v][i] for i in range(2)) <= half for v in cycle
            ), "dual vertex violates a supporting inequality"
        start = min(range(n), key=lambda k: corner[k])
        vertices = tuple(corner[(start + k) % n] for k in range(n))

    faces = tuple(
        Face(v, normals[v], half, endpoints.get(v)) for v in poly.hull
    )
    return NormBall(z0, faces, vertices)
