"""Fox calculus, Alexander matrices, elementary ideals, Alexander polynomials.

The Alexander matrix of a presentation has one row per relator and one
column per generator; entry (i, j) is the free-differential derivative
of relator i with respect to generator j, pushed into the group ring of
the free abelianized quotient.  Fox's fundamental identity

    sum_j (dr/dx_j) (x_j - 1) = r - 1 = 0   in Z[ab(G)]

holds on every row and is asserted at construction.

The i-th elementary ideal is generated by the (s-i) x (s-i) minors of
this matrix (s = number of generators), with the usual Fitting-ideal
conventions: minors larger than the matrix generate the zero ideal, and
the empty 0 x 0 minor is 1, so E_s = (1).  The Alexander polynomial is
the gcd of the generators of E_1, normalized as in :mod:`.laurent` and
therefore well defined only up to a unit ±monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .laurent import (
    LaurentPoly,
    equal_up_to_unit,
    gcd_many,
    invert_variables,
    poly_matrix_det,
    poly_to_text,
    unit_quotient,
)
from .words import (
    AbelianizationMap,
    Generator,
    Presentation,
    Word,
    free_abelianization,
)


def fox_derivative(w: Word, x: Generator | str, ab: AbelianizationMap) -> LaurentPoly:
    """Free-differential derivative dw/dx in Z[ab(G)].

    Satisfies d(uv)/dx = du/dx + u_bar * dv/dx, with d(x)/dx = 1 and
    d(x^-1)/dx = -x_bar^-1.

    >>> from .words import make_alphabet, parse_word, presentation
    >>> pres = presentation("a b", [])
    >>> m = free_abelianization(pres)
    >>> w = parse_word("a b", pres.alphabet)
    >>> fox_derivative(w, "a", m) == LaurentPoly.one(2)
    True
    """
    if w.alphabet != ab.alphabet:
        raise ValueError("word and abelianization are over different alphabets")
    name = x.name if isinstance(x, Generator) else x
    try:
        target = next(i for i, g in enumerate(w.alphabet) if g.name == name)
    except StopIteration:
        raise ValueError(f"generator {name!r} is not in the alphabet") from None

    rank = ab.rank
    columns = [ab.generator_image(j) for j in range(len(w.alphabet))]
    prefix = [0] * rank
    terms: dict[tuple[int, ...], int] = {}

    def bump(exps: tuple[int, ...], delta: int) -> None:
        s = terms.get(exps, 0) + delta
        if s:
            terms[exps] = s
        else:
            terms.pop(exps, None)

    for idx, sign in w.letters:
        col = columns[idx]
        if sign > 0:
            if idx == target:
                bump(tuple(prefix), 1)
            for k in range(rank):
                prefix[k] += col[k]
        else:
            for k in range(rank):
                prefix[k] -= col[k]
            if idx == target:
                bump(tuple(prefix), -1)
    return LaurentPoly(rank, terms)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Abelianized Fox derivative matrix of a presentation."""

    presentation: Presentation
    abelianization: AbelianizationMap
    entries: tuple[tuple[LaurentPoly, ...], ...]  # rows = relators, cols = generators

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.presentation.alphabet)

    def __post_init__(self) -> None:
        ab = self.abelianization
        rank = ab.rank
        for i, row in enumerate(self.entries):
            total = LaurentPoly.zero(rank)
            for j, entry in enumerate(row):
                xj = LaurentPoly.monomial(rank, ab.generator_image(j))
                total = total + entry * (xj - 1)
            assert total.is_zero(), f"fundamental identity fails on relator {i}"


def alexander_matrix(p: Presentation) -> AlexanderMatrix:
    """Matrix of abelianized Fox derivatives of the relators."""
    ab = free_abelianization(p)
    rows = tuple(
        tuple(fox_derivative(r, g, ab) for g in p.alphabet) for r in p.relators
    )
    return AlexanderMatrix(p, ab, rows)


@dataclass(frozen=True)
class ElementaryIdealGens:
    """Generators (minors) of the i-th elementary ideal of an Alexander matrix."""

    index: int
    minor_size: int
    generators: tuple[LaurentPoly, ...]


def elementary_ideal(mat: AlexanderMatrix, i: int) -> ElementaryIdealGens:
    """All (s-i) x (s-i) minors, with Fitting conventions for degenerate sizes."""
    if i < 0:
        raise ValueError("elementary ideal index must be nonnegative")
    s = mat.ncols
    k = s - i
    rank = mat.abelianization.rank
    if k <= 0:
        return ElementaryIdealGens(i, 0, (LaurentPoly.one(rank),))
    if k > mat.nrows:
        return ElementaryIdealGens(i, k, ())
    gens: list[LaurentPoly] = []
    for rows in combinations(range(mat.nrows), k):
        for cols in combinations(range(s), k):
            sub = [[mat.entries[r][c] for c in cols] for r in rows]
            gens.append(poly_matrix_det(sub))
    return ElementaryIdealGens(i, k, tuple(gens))


@dataclass(frozen=True)
class AlexanderData:
    """Alexander polynomial together with the objects used to compute it."""

    polynomial: LaurentPoly  # unit-normalized; zero when degenerate
    matrix: AlexanderMatrix
    first_ideal: ElementaryIdealGens
    degenerate: bool  # E_1 had no nonzero generator
    rank_zero: bool  # b_1 = 0, so the group ring is Z

    @property
    def abelianization(self) -> AbelianizationMap:
        return self.matrix.abelianization


def alexander_data(p: Presentation) -> AlexanderData:
    mat = alexander_matrix(p)
    e1 = elementary_ideal(mat, 1)
    nonzero = [g for g in e1.generators if not g.is_zero()]
    rank_zero = mat.abelianization.rank == 0
    if not nonzero:
        return AlexanderData(
            LaurentPoly.zero(mat.abelianization.rank), mat, e1, True, rank_zero
        )
    return AlexanderData(gcd_many(nonzero), mat, e1, False, rank_zero)


def alexander_polynomial(p: Presentation) -> LaurentPoly:
    """Gcd of the first elementary ideal, unit-normalized.

    Returns the zero polynomial when every E_1 generator vanishes (use
    :func:`alexander_data` to see that flag, and the rank-0 flag for
    presentations whose free abelianized quotient is trivial).
    """
    return alexander_data(p).polynomial


def check_symmetry(d: LaurentPoly) -> bool:
    """Whether d(x) and d(x^-1) agree up to a unit."""
    return equal_up_to_unit(d, invert_variables(d))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a structural check, shaped for the JSON report schema."""

    check: str
    status: str  # "pass" | "fail" | "unsupported"
    witnesses: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "witnesses": list(self.witnesses),
        }


def check_e1_structure(p: Presentation) -> CheckReport:
    """Verify E_1 = m * (Delta) for a two-generator one-relator presentation.

    Concretely: dr/da must be (b - 1) * Delta up to a unit and dr/db must
    be (a - 1) * Delta up to a unit, where m is the augmentation ideal.
    Only the verifiable shape (2 generators, 1 relator, b_1 = 2) is
    accepted; anything else is reported as unsupported, not an error.
    """
    name = "e1_structure"
    if len(p.alphabet) != 2 or len(p.relators) != 1:
        return CheckReport(
            name,
            "unsupported",
            (f"needs 2 generators and 1 relator, got {len(p.alphabet)} and {len(p.relators)}",),
        )
    data = alexander_data(p)
    ab = data.abelianization
    if ab.rank != 2:
        return CheckReport(name, "unsupported", (f"needs b_1 = 2, got {ab.rank}",))
    if data.degenerate:
        return CheckReport(name, "fail", ("both Fox derivatives vanish",))

    names = tuple(g.name for g in p.alphabet)
    delta = data.polynomial
    witnesses: list[str] = [f"delta = {poly_to_text(delta, names)}"]
    status = "pass"
    # b_1 = 2 forces the abelianization matrix to be the identity here,
    # so generator j maps to the monomial of variable j.
    for j, other in ((0, 1), (1, 0)):
        xo = LaurentPoly.monomial(2, ab.generator_image(other))
        expected = (xo - 1) * delta
        actual = data.matrix.entries[0][j]
        unit = unit_quotient(expected, actual)
        if unit is None:
            status = "fail"
            witnesses.append(
                f"d/d{names[j]} = {poly_to_text(actual, names)} is not a unit multiple of "
                f"({names[other]} - 1) * delta"
            )
        else:
            witnesses.append(
                f"d/d{names[j]} = u * ({names[other]} - 1) * delta with u = {poly_to_text(unit, names)}"
            )
    return CheckReport(name, status, tuple(witnesses))


def check_fundamental_identity(p: Presentation) -> CheckReport:
    """Recompute the Fox fundamental identity row by row (always asserted anyway)."""
    mat = alexander_matrix(p)
    ab = mat.abelianization
    witnesses = []
    for i, row in enumerate(mat.entries):
        total = LaurentPoly.zero(ab.rank)
        for j, entry in enumerate(row):
            xj = LaurentPoly.monomial(ab.rank, ab.generator_image(j))
            total = total + entry * (xj - 1)
        if not total.is_zero():
            return CheckReport(
                "fundamental_identity", "fail", (f"relator {i}: residue {total!r}",)
            )
        witnesses.append(f"relator {i}: sum_j (dr/dx_j)(x_j - 1) = 0")
    return CheckReport("fundamental_identity", "pass", tuple(witnesses))
