"""The braid action on the free algebra and its left/right action matrices.

The positive generator sigma_k acts on generators by the substitution

    a_ij      -> a_ij                       i, j not in {k, k+1}
    a_{k+1,i} -> a_ki                       i not in {k, k+1}
    a_{i,k+1} -> a_ik                       i not in {k, k+1}
    a_{k,k+1} -> -a_{k+1,k}
    a_{k+1,k} -> -a_{k,k+1}
    a_ki      -> a_{k+1,i} - a_{k+1,k} a_ki
    a_ik      -> a_{i,k+1} - a_ik a_{k,k+1}

extended multiplicatively.  Words act with the leftmost letter outermost:
act(b1 * b2, x) == act(b1, act(b2, x)), which is exactly the convention under
which the chain rule below holds.  The substitution for a negative letter is
obtained by formally inverting the table above; it is pinned down by the
round-trip property act(inverse letter, act(letter, x)) == x, which the test
suite certifies.

For beta in B_n, extending by an untouched strand at n+1 and acting on the
module spanned by a_{1,n+1}..a_{n,n+1} (resp. a_{n+1,1}..a_{n+1,n}) yields the
n x n matrices over the algebra computed by :func:`phi_left` and
:func:`phi_right`.  These satisfy the chain rule

    PhiL(b1 b2) = act(b1, PhiL(b2)) . PhiL(b1)
    PhiR(b1 b2) = PhiR(b1) . act(b1, PhiR(b2))

so both are computed by folding per-letter matrices.  phi_right is the
transpose of the entrywise conjugate of phi_left; the two are computed along
independent routes here so the symmetry stays a testable fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .braids import BraidWord
from .freealg import Gen, Mon, NCPoly, _check_budget

# ---------------------------------------------------------------------------
# The action on polynomials
# ---------------------------------------------------------------------------

_Image = tuple[tuple[int, Mon], ...]


def _letter_images(n: int, star: bool, k: int, inverse: bool) -> dict[Gen, _Image]:
    """Substitution table for one letter, only for the generators it moves."""
    top = n + 1 if star else n
    others = [t for t in range(1, top + 1) if t not in (k, k + 1)]
    K, K1 = k, k + 1
    imgs: dict[Gen, _Image] = {
        (K, K1): ((-1, ((K1, K),)),),
        (K1, K): ((-1, ((K, K1),)),),
    }
    if not inverse:
        for i in others:
            imgs[(K1, i)] = ((1, ((K, i),)),)
            imgs[(i, K1)] = ((1, ((i, K),)),)
            imgs[(K, i)] = ((1, ((K1, i),)), (-1, ((K1, K), (K, i))))
            imgs[(i, K)] = ((1, ((i, K1),)), (-1, ((i, K), (K, K1))))
    else:
        for i in others:
            imgs[(K, i)] = ((1, ((K1, i),)),)
            imgs[(i, K)] = ((1, ((i, K1),)),)
            imgs[(K1, i)] = ((1, ((K, i),)), (-1, ((K, K1), (K1, i))))
            imgs[(i, K1)] = ((1, ((i, K),)), (-1, ((i, K1), (K1, K))))
    return imgs


def phi_letter(e: int, x: NCPoly) -> NCPoly:
    """Apply the substitution of a single signed letter to a polynomial."""
    k = abs(e)
    if not 1 <= k <= x.n - 1:
        raise ValueError(f"letter {e} out of range for ambient {x.n}")
    imgs = _letter_images(x.n, x.star, k, e < 0)
    out: dict[Mon, int] = {}
    for mon, coeff in x.terms.items():
        _check_budget(len(out))
        parts = [imgs.get(g) for g in mon]
        if all(p is None for p in parts):
            acc = out.get(mon, 0) + coeff
            if acc:
                out[mon] = acc
            else:
                out.pop(mon, None)
            continue
        partial: list[tuple[Mon, int]] = [((), coeff)]
        for g, img in zip(mon, parts):
            if img is None:
                partial = [(m + (g,), c) for m, c in partial]
            else:
                partial = [(m + frag, c * ci) for m, c in partial for ci, frag in img]
        for m, c in partial:
            acc = out.get(m, 0) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
    _check_budget(len(out))
    return NCPoly._raw(x.n, x.star, out)


def phi(beta: BraidWord, x: NCPoly) -> NCPoly:
    """Act by a braid word; the leftmost letter is applied last."""
    if beta.n != x.n:
        raise ValueError(f"braid in B_{beta.n} cannot act on ambient {x.n}")
    for e in reversed(beta.letters):
        x = phi_letter(e, x)
    return x


def phi_star(beta: BraidWord, x: NCPoly) -> NCPoly:
    """Act on the starred extension (beta included with the extra slot untouched)."""
    if not x.star:
        raise ValueError("phi_star expects a starred polynomial")
    return phi(beta, x)


# ---------------------------------------------------------------------------
# Star-slot module decomposition
# ---------------------------------------------------------------------------


class StarDecompositionError(ValueError):
    """A starred polynomial is not a clean module element."""


def star_decompose(x: NCPoly) -> dict[int, NCPoly]:
    """Write a left-module element as {j: coefficient of a_{j,*}}.

    Every monomial must contain exactly one starred generator, in final
    position, with the star as its second index; anything else is an internal
    indexing error and raises.
    """
    if not x.star:
        raise StarDecompositionError("expected a starred polynomial")
    s = x.n + 1
    rows: dict[int, dict[Mon, int]] = {}
    for mon, c in x.terms.items():
        if not mon:
            raise StarDecompositionError(f"constant term {c} has no star slot")
        head, last = mon[:-1], mon[-1]
        if last[1] != s or last[0] == s:
            raise StarDecompositionError(f"monomial does not end with a_{{j,*}}: {mon}")
        if any(s in g for g in head):
            raise StarDecompositionError(f"extra star inside monomial: {mon}")
        row = rows.setdefault(last[0], {})
        row[head] = row.get(head, 0) + c
    return {
        j: NCPoly._raw(x.n, False, {m: c for m, c in terms.items() if c})
        for j, terms in rows.items()
    }


def star_decompose_right(x: NCPoly) -> dict[int, NCPoly]:
    """Write a right-module element as {j: coefficient right of a_{*,j}}."""
    if not x.star:
        raise StarDecompositionError("expected a starred polynomial")
    s = x.n + 1
    cols: dict[int, dict[Mon, int]] = {}
    for mon, c in x.terms.items():
        if not mon:
            raise StarDecompositionError(f"constant term {c} has no star slot")
        first, tail = mon[0], mon[1:]
        if first[0] != s or first[1] == s:
            raise StarDecompositionError(f"monomial does not start with a_{{*,j}}: {mon}")
        if any(s in g for g in tail):
            raise StarDecompositionError(f"extra star inside monomial: {mon}")
        col = cols.setdefault(first[1], {})
        col[tail] = col.get(tail, 0) + c
    return {
        j: NCPoly._raw(x.n, False, {m: c for m, c in terms.items() if c})
        for j, terms in cols.items()
    }


# ---------------------------------------------------------------------------
# Action matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PhiMatrix:
    """An n x n matrix of polynomials representing the left or right action."""

    n: int
    side: str
    entries: tuple[tuple[NCPoly, ...], ...]

    def __post_init__(self) -> None:
        if self.side not in ("L", "R"):
            raise ValueError(f"side must be 'L' or 'R', got {self.side!r}")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entry grid is not n x n")
        for row in self.entries:
            for x in row:
                if x.n != self.n or x.star:
                    raise ValueError("entry ambient does not match matrix size")

    @classmethod
    def identity(cls, n: int, side: str) -> "PhiMatrix":
        one, zero = NCPoly.one(n), NCPoly.zero(n)
        return cls(
            n, side, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    def at(self, i: int, j: int) -> NCPoly:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def map_entries(self, fn: Callable[[NCPoly], NCPoly]) -> "PhiMatrix":
        return PhiMatrix(self.n, self.side, tuple(tuple(fn(x) for x in row) for row in self.entries))

    def conj_transpose(self, side: str | None = None) -> "PhiMatrix":
        """Transpose of the entrywise conjugate, tagged with the opposite side."""
        new_side = side or ("R" if self.side == "L" else "L")
        return PhiMatrix(
            self.n,
            new_side,
            tuple(
                tuple(self.entries[j][i].conjugate() for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def render_entries(self) -> list[list[str]]:
        return [[x.render() for x in row] for row in self.entries]

    def to_obj(self) -> dict:
        return {"n": self.n, "side": self.side, "entries": self.render_entries()}


def mat_mul(a: PhiMatrix, b: PhiMatrix) -> PhiMatrix:
    if a.n != b.n or a.side != b.side:
        raise ValueError("matrix mismatch")
    n = a.n
    zero = NCPoly.zero(n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for l in range(n):
                x, y = a.entries[i][l], b.entries[l][j]
                if x.is_zero() or y.is_zero():
                    continue
                if x.is_one():
                    acc = acc + y
                elif y.is_one():
                    acc = acc + x
                else:
                    acc = acc + x * y
            row.append(acc)
        rows.append(tuple(row))
    return PhiMatrix(n, a.side, tuple(rows))


def letter_matrix(n: int, e: int, side: str) -> PhiMatrix:
    """The action matrix of a single signed letter."""
    k = abs(e)
    if not 1 <= k <= n - 1:
        raise ValueError(f"letter {e} out of range for B_{n}")
    grid = [
        [NCPoly.one(n) if i == j else NCPoly.zero(n) for j in range(n)] for i in range(n)
    ]
    K, K1 = k - 1, k  # 0-based block corner
    if side == "L":
        block_gen = NCPoly.gen(n, k + 1, k) if e > 0 else NCPoly.gen(n, k, k + 1)
    elif side == "R":
        block_gen = NCPoly.gen(n, k, k + 1) if e > 0 else NCPoly.gen(n, k + 1, k)
    else:
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    one, zero = NCPoly.one(n), NCPoly.zero(n)
    if e > 0:
        grid[K][K], grid[K][K1] = -block_gen, one
        grid[K1][K], grid[K1][K1] = one, zero
    else:
        grid[K][K], grid[K][K1] = zero, one
        grid[K1][K], grid[K1][K1] = one, -block_gen
    return PhiMatrix(n, side, tuple(tuple(row) for row in grid))


def phi_left(beta: BraidWord) -> PhiMatrix:
    """Left action matrix, by per-letter chain-rule folding."""
    m = PhiMatrix.identity(beta.n, "L")
    for e in reversed(beta.letters):
        m = mat_mul(m.map_entries(lambda x: phi_letter(e, x)), letter_matrix(beta.n, e, "L"))
    return m


def phi_right(beta: BraidWord) -> PhiMatrix:
    """Right action matrix, by per-letter chain-rule folding."""
    m = PhiMatrix.identity(beta.n, "R")
    for e in reversed(beta.letters):
        m = mat_mul(letter_matrix(beta.n, e, "R"), m.map_entries(lambda x: phi_letter(e, x)))
    return m


def phi_matrix(beta: BraidWord, side: str) -> PhiMatrix:
    if side == "L":
        return phi_left(beta)
    if side == "R":
        return phi_right(beta)
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def chain_compose(m1: PhiMatrix, m2: PhiMatrix, beta1: BraidWord) -> PhiMatrix:
    """Compose action matrices: m1 for beta1, m2 for beta2, result for beta1*beta2."""
    if m1.side != m2.side or m1.n != m2.n:
        raise ValueError("matrix mismatch")
    if beta1.n != m1.n:
        raise ValueError("braid ambient does not match matrices")
    moved = m2.map_entries(lambda x: phi(beta1, x))
    if m1.side == "L":
        return mat_mul(moved, m1)
    return mat_mul(m1, moved)


def phi_left_direct(beta: BraidWord) -> PhiMatrix:
    """Left matrix via acting on each starred basis element and decomposing.

    Independent of the chain-rule fold; used to cross-check it.
    """
    n = beta.n
    zero = NCPoly.zero(n)
    rows = []
    for i in range(1, n + 1):
        img = phi_star(beta, NCPoly.gen(n, i, n + 1, star=True))
        coeffs = star_decompose(img)
        rows.append(tuple(coeffs.get(j, zero) for j in range(1, n + 1)))
    return PhiMatrix(n, "L", tuple(rows))


def phi_right_direct(beta: BraidWord) -> PhiMatrix:
    """Right matrix via the starred right-module basis."""
    n = beta.n
    zero = NCPoly.zero(n)
    grid = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        img = phi_star(beta, NCPoly.gen(n, n + 1, i, star=True))
        for j, coeff in star_decompose_right(img).items():
            grid[j - 1][i - 1] = coeff
    return PhiMatrix(n, "R", tuple(tuple(row) for row in grid))


# ---------------------------------------------------------------------------
# Closed forms for band words
# ---------------------------------------------------------------------------


def _chain_asc(i: int, ys: tuple[int, ...], j: int) -> Mon:
    pts = (i,) + ys + (j,)
    return tuple((pts[t], pts[t + 1]) for t in range(len(pts) - 1))


def _chain_desc(i: int, ys: tuple[int, ...], j: int) -> Mon:
    pts = (i,) + tuple(reversed(ys)) + (j,)
    return tuple((pts[t], pts[t + 1]) for t in range(len(pts) - 1))


def _subsets(m: int, l: int) -> Iterable[tuple[int, ...]]:
    window = range(m, m + l)
    for size in range(l + 1):
        yield from combinations(window, size)


def sum_asc(n_amb: int, i: int, j: int, m: int, l: int, *, star: bool = False) -> NCPoly:
    """Alternating sum over subsets of the window, indices ascending inside."""
    terms: dict[Mon, int] = {}
    for ys in _subsets(m, l):
        terms[_chain_asc(i, ys, j)] = (-1) ** len(ys)
    return NCPoly(n_amb, terms, star=star)


def sum_desc(n_amb: int, i: int, j: int, m: int, l: int, *, star: bool = False) -> NCPoly:
    """Alternating sum over subsets of the window, indices descending inside."""
    terms: dict[Mon, int] = {}
    for ys in _subsets(m, l):
        terms[_chain_desc(i, ys, j)] = (-1) ** len(ys)
    return NCPoly(n_amb, terms, star=star)


def sum_crossing(n_amb: int, i: int, j: int, m: int, l: int, *, star: bool = False) -> NCPoly:
    """Signed descending sum used when the target lands inside the window.

    Subsets whose minimum is j are skipped; the sign is -(-1)^|Y| when the
    subset avoids {m..j} entirely and (-1)^|Y| when it meets {m..j-1}.
    """
    terms: dict[Mon, int] = {}
    for ys in _subsets(m, l):
        if ys and ys[0] == j:
            continue
        low = [y for y in ys if y <= j]
        if not low:
            c = -((-1) ** len(ys))
        else:
            # min element is < j because subsets with min exactly j are skipped
            c = (-1) ** len(ys)
        mon = _chain_desc(i, ys, j)
        acc = terms.get(mon, 0) + c
        if acc:
            terms[mon] = acc
        else:
            terms.pop(mon, None)
    return NCPoly(n_amb, terms, star=star)


def tau_closed_form(m: int, p: int, i: int, j: int, n: int, *, star: bool = False) -> NCPoly:
    """Image of a_ij (i < j) under the ascending band word of width p at m."""
    top = n + 1 if star else n
    if not (1 <= i < j <= top):
        raise ValueError(f"need 1 <= i < j <= {top}, got ({i}, {j})")
    if m < 1 or m + p > n:
        raise ValueError(f"window (m={m}, p={p}) does not fit in ambient {n}")
    g = lambda a, b: NCPoly.gen(n, a, b, star=star)
    if m <= i < j < m + p:
        return g(i + 1, j + 1)
    if m <= i < j == m + p:
        return -g(i + 1, m)
    if i == m + p:
        return g(m, j)
    if i < m and j == m + p:
        return g(i, m)
    if i < m <= j < m + p:
        return g(i, j + 1) - g(i, m) * g(m, j + 1)
    if m <= i < m + p < j:
        return g(i + 1, j) - g(i + 1, m) * g(m, j)
    return g(i, j)


def kappa_closed_form(
    m: int, l: int, p: int, i: int, j: int, n: int, *, star: bool = False
) -> NCPoly:
    """Image of a_ij (i < j) under the descending product of band words.

    Valid for window count l <= p; the l = p case is the cabled generator.
    """
    top = n + 1 if star else n
    if not (1 <= i < j <= top):
        raise ValueError(f"need 1 <= i < j <= {top}, got ({i}, {j})")
    if not (1 <= l <= p) or m < 1 or m + l + p - 1 > n:
        raise ValueError(f"(m={m}, l={l}, p={p}) does not fit in ambient {n}")
    g = lambda a, b: NCPoly.gen(n, a, b, star=star)
    in_first = lambda t: m <= t < m + p
    in_second = lambda t: m + p <= t < m + p + l
    if in_first(i) and in_first(j):
        return g(i + l, j + l)
    if in_second(i) and in_second(j):
        return g(i - p, j - p)
    if in_first(i) and in_second(j):
        return sum_crossing(n, i + l, j - p, m, l, star=star)
    if in_second(i) and j >= m + l + p:
        return g(i - p, j)
    if i < m and in_second(j):
        return g(i, j - p)
    if i < m and in_first(j):
        return sum_asc(n, i, j + l, m, l, star=star)
    if in_first(i) and j >= m + p + l:
        return sum_desc(n, i + l, j, m, l, star=star)
    return g(i, j)


def cabled_generator_closed_form(
    n_gen: int, p: int, k: int, i: int, j: int, *, star: bool = False
) -> NCPoly:
    """Image of a_ij (i < j) under the p-cable of sigma_{n_gen} in B_{kp}."""
    if not 1 <= n_gen <= k - 1:
        raise ValueError(f"generator index {n_gen} out of range for B_{k}")
    return kappa_closed_form((n_gen - 1) * p + 1, p, p, i, j, k * p, star=star)
