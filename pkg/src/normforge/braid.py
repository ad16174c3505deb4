"""Braid words, the reduced Burau representation, and mapping-torus invariants.

The reduced Burau representation sends the n-strand braid group into
GL(n-1, Z[t^±1]).  The generator images used here are the standard
reduced form

    sigma_1     -> [[-t, 0], [1, 1]] (+) I
    sigma_i     -> I (+) [[1, t, 0], [0, -t, 0], [0, 1, 1]] (+) I
    sigma_{n-1} -> I (+) [[1, t], [0, -t]]

(1x1 matrix [-t] when n = 2).  The matrix convention is not what
anchors correctness: for a braid whose underlying permutation is an
n-cycle, the characteristic-polynomial invariant det(wI - Burau(beta))
must agree, up to a unit and the documented variable identification,
with the Alexander polynomial of the braid's mapping torus computed by
Fox calculus from an explicit presentation.  That cross-check is
convention independent and is exercised exhaustively in the test suite.

The mapping-torus presentation has generators x_1, ..., x_n, s and
relators  s x_i s^{-1} (beta_*(x_i))^{-1},  where beta_* is the usual
action on the free group of the punctured disc:

    sigma_i:  x_i -> x_i x_{i+1} x_i^{-1},   x_{i+1} -> x_i.

For an n-cycle braid the free abelianization has rank 2 with basis (the
common puncture-loop class, the suspension class); in that basis the
determinant formula holds with the identity substitution t -> t' under
the conventions above (the toggle ``t_substitution="inverse"`` applies
t -> t'^{-1} instead, for comparing against the opposite loop
orientation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alexander import alexander_data
from .laurent import (
    LaurentPoly,
    exponent_map,
    poly_matrix_det,
)
from .words import (
    Generator,
    Presentation,
    Word,
    free_abelianization,
    make_alphabet,
)

BraidLetter = tuple[int, int]  # (generator index in 1..n-1, sign)


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators sigma_1, ..., sigma_{n-1}."""

    strands: int
    letters: tuple[BraidLetter, ...]

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError("a braid group needs at least 2 strands")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.strands - 1:
                raise ValueError(
                    f"generator index {idx} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise ValueError("braid letter signs must be ±1")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        body = " ".join(str(i * s) for i, s in self.letters)
        return f"n={self.strands}: {body}"


def parse_braid(text: str) -> BraidWord:
    """Parse the grammar ``n=5: 1 2 -3 4`` (signed generator indices).

    Comments (from ``#``) and blank lines are ignored, so braid files
    can carry a description.
    """
    body = " ".join(
        line.split("#", 1)[0].strip() for line in text.splitlines()
    ).strip()
    if not body:
        raise ValueError("empty braid text")
    head, colon, rest = body.partition(":")
    head = head.replace(" ", "")
    if not colon or not head.startswith("n="):
        raise ValueError("braid text must start with 'n=<strands>:'")
    try:
        strands = int(head[2:])
    except ValueError:
        raise ValueError(f"malformed strand count {head[2:]!r}") from None
    letters = []
    for tok in rest.split():
        try:
            k = int(tok)
        except ValueError:
            raise ValueError(f"malformed braid letter {tok!r}") from None
        if k == 0:
            raise ValueError("braid letter 0 is not a generator")
        letters.append((abs(k), 1 if k > 0 else -1))
    return BraidWord(strands, tuple(letters))


def gamma(n: int) -> BraidWord:
    """The ascending product sigma_1 sigma_2 ... sigma_{n-1}; an n-cycle braid."""
    if n < 2:
        raise ValueError("gamma(n) needs n >= 2")
    return BraidWord(n, tuple((i, 1) for i in range(1, n)))


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying permutation of the punctures, as images (0-indexed).

    Each sigma_i maps to the transposition (i, i+1); letters compose so
    that the first letter of the word acts last, matching the matrix
    product convention of :func:`burau`.
    """
    perm = list(range(b.strands))
    for idx, _sign in reversed(b.letters):
        i = idx - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def is_n_cycle(b: BraidWord) -> bool:
    """Whether the puncture permutation is a single n-cycle."""
    perm = permutation(b)
    seen = 1
    k = perm[0]
    while k != 0:
        k = perm[k]
        seen += 1
    return seen == b.strands


# --------------------------------------------------------------------------
# Reduced Burau matrices
# --------------------------------------------------------------------------


def _generator_matrix(n: int, index: int, sign: int) -> list[list[LaurentPoly]]:
    dim = n - 1
    t = LaurentPoly.variable(1, 0)
    tinv = LaurentPoly.monomial(1, (-1,))
    one = LaurentPoly.one(1)
    zero = LaurentPoly.zero(1)
    m = [[one if i == j else zero for j in range(dim)] for i in range(dim)]
    i = index - 1  # 0-based row/col of the -t pivot
    if sign > 0:
        m[i][i] = -t
        if i > 0:
            m[i - 1][i] = t
        if i < dim - 1:
            m[i + 1][i] = one
    else:
        m[i][i] = -tinv
        if i > 0:
            m[i - 1][i] = one
        if i < dim - 1:
            m[i + 1][i] = tinv
    return m


def _mat_mul(
    a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]
) -> list[list[LaurentPoly]]:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = LaurentPoly.zero(a[0][0].nvars)
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class BurauMatrix:
    """An (n-1) x (n-1) matrix over Z[t^±1]; invertible, det = ±t^k."""

    strands: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def dim(self) -> int:
        return self.strands - 1

    def det(self) -> LaurentPoly:
        return poly_matrix_det(self.entries)

    def is_unit_determinant(self) -> bool:
        return self.det().is_unit()


def burau(b: BraidWord) -> BurauMatrix:
    """Reduced Burau matrix of a braid word (product of generator images).

    >>> m = burau(BraidWord(2, ((1, 1),)))
    >>> m.entries[0][0] == -LaurentPoly.variable(1, 0)
    True
    """
    dim = b.strands - 1
    one = LaurentPoly.one(1)
    zero = LaurentPoly.zero(1)
    m = [[one if i == j else zero for j in range(dim)] for i in range(dim)]
    for idx, sign in b.letters:
        m = _mat_mul(m, _generator_matrix(b.strands, idx, sign))
    return BurauMatrix(b.strands, tuple(tuple(row) for row in m))


# --------------------------------------------------------------------------
# Mapping torus
# --------------------------------------------------------------------------


def _apply_generator(idx: int, sign: int, w: Word) -> Word:
    # Image of a free-group word under the action of sigma_idx^sign on
    # the puncture generators x_1..x_n (the last alphabet letter, s, is
    # never touched by braid letters).
    alphabet = w.alphabet
    i = idx - 1
    out: list[tuple[int, int]] = []
    if sign > 0:
        # x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
        images = {
            (i, 1): [(i, 1), (i + 1, 1), (i, -1)],
            (i, -1): [(i, 1), (i + 1, -1), (i, -1)],
            (i + 1, 1): [(i, 1)],
            (i + 1, -1): [(i, -1)],
        }
    else:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        images = {
            (i, 1): [(i + 1, 1)],
            (i, -1): [(i + 1, -1)],
            (i + 1, 1): [(i + 1, -1), (i, 1), (i + 1, 1)],
            (i + 1, -1): [(i + 1, -1), (i, -1), (i + 1, 1)],
        }
    for letter in w.letters:
        out.extend(images.get(letter, [letter]))
    return Word(alphabet, out)


def braid_action(b: BraidWord, w: Word) -> Word:
    """Image of w under beta_*; letters act so that (uv)_* = u_* o v_*."""
    for idx, sign in reversed(b.letters):
        w = _apply_generator(idx, sign, w)
    return w


def braid_alphabet(n: int) -> tuple[Generator, ...]:
    return make_alphabet([f"x{i}" for i in range(1, n + 1)] + ["s"])


def mapping_torus_presentation(b: BraidWord) -> Presentation:
    """Presentation of the mapping torus: ⟨x_1..x_n, s | s x_i s^-1 = beta_*(x_i)⟩."""
    n = b.strands
    alphabet = braid_alphabet(n)
    s = Word(alphabet, [(n, 1)])
    relators = []
    for i in range(n):
        xi = Word(alphabet, [(i, 1)])
        relators.append(s * xi * s.inverse() * braid_action(b, xi).inverse())
    return Presentation(alphabet, tuple(relators))


@dataclass(frozen=True)
class MappingTorusDelta:
    """det(wI - Burau(beta)) in the homology basis (t', w) of the mapping torus.

    ``n_cycle`` flags whether the determinant formula applies as stated;
    for non-n-cycle braids the value is still returned but should not be
    read as the mapping-torus Alexander polynomial.
    """

    poly: LaurentPoly  # variables: (t', w)
    n_cycle: bool
    substitution: str  # "direct" (t -> t') or "inverse" (t -> t'^{-1})


def mapping_torus_delta(b: BraidWord, t_substitution: str = "direct") -> MappingTorusDelta:
    """Characteristic-polynomial Alexander invariant of the braid mapping torus.

    >>> d = mapping_torus_delta(BraidWord(2, ((1, 1),)))
    >>> from .laurent import poly_to_text
    >>> poly_to_text(d.poly, ("t", "w"))
    't + w'
    """
    if t_substitution not in ("direct", "inverse"):
        raise ValueError("t_substitution must be 'direct' or 'inverse'")
    m = burau(b)
    dim = m.dim
    # Embed into Z[t^±, w^±] with t = variable 0, w = variable 1.
    w = LaurentPoly.variable(2, 1)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            entry = exponent_map(m.entries[i][j], [[1], [0]])
            row.append((w if i == j else LaurentPoly.zero(2)) - entry)
        rows.append(row)
    det = poly_matrix_det(rows)
    if t_substitution == "inverse":
        det = exponent_map(det, [[-1, 0], [0, 1]])
    return MappingTorusDelta(det, is_n_cycle(b), t_substitution)


def mapping_torus_delta_fox(b: BraidWord) -> LaurentPoly:
    """Fox-calculus Alexander polynomial of the mapping torus, in basis (t', w).

    Computes the Alexander polynomial of :func:`mapping_torus_presentation`
    and rewrites it in the basis given by the class of x_1 (variable 0)
    and the class of s (variable 1).  Requires the braid to be an
    n-cycle, which is exactly when that pair is a basis of rank-2 homology.
    """
    if not is_n_cycle(b):
        raise ValueError("the mapping-torus comparison needs an n-cycle braid")
    pres = mapping_torus_presentation(b)
    ab = free_abelianization(pres)
    assert ab.rank == 2 and not ab.torsion, "n-cycle mapping torus has H_1 = Z^2"
    data = alexander_data(pres)
    x1 = Word(pres.alphabet, [(0, 1)])
    s = Word(pres.alphabet, [(len(pres.alphabet) - 1, 1)])
    c1 = ab.image(x1)
    c2 = ab.image(s)
    det = c1[0] * c2[1] - c1[1] * c2[0]
    assert abs(det) == 1, "puncture and suspension classes must form a basis"
    # Inverse of the column matrix [c1 c2]: det * adjugate, exact over Z.
    inv = [
        [det * c2[1], det * -c2[0]],
        [det * -c1[1], det * c1[0]],
    ]
    return exponent_map(data.polynomial, inv)
