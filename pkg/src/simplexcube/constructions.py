"""Named simplices, parameterized families and Hadamard-based regular simplices.

Builtin identifiers accepted by :func:`builtin`::

    s1, s2, perfect5, sstar:<n>, regular:<n>, R:<s>:<t>, T:<t>, S9:<t>
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import as_rational, parse_rational
from .simplex import Simplex

F = Fraction
THIRD = F(1, 3)
HALF = F(1, 2)


class UnsupportedOrderError(ValueError):
    pass


class UnknownConstructionError(ValueError):
    pass


# -- Hadamard matrices -------------------------------------------------------

@dataclass(frozen=True)
class HadamardMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def is_valid(self) -> bool:
        m = self.order
        rows = self.entries
        if any(len(r) != m or any(x not in (1, -1) for x in r) for r in rows):
            return False
        return all(
            sum(a * b for a, b in zip(rows[i], rows[k])) == (m if i == k else 0)
            for i in range(m)
            for k in range(i, m)
        )

    def is_normalized(self) -> bool:
        return all(x == 1 for x in self.entries[0]) and all(r[0] == 1 for r in self.entries)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _kron(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def _sylvester(k: int) -> list[list[int]]:
    h = [[1]]
    for _ in range(k):
        h = _kron([[1, 1], [1, -1]], h)
    return h


def _paley1(q: int) -> list[list[int]]:
    # q prime, q = 3 (mod 4); order q + 1
    residues = {(x * x) % q for x in range(1, q)}

    def chi(a: int) -> int:
        a %= q
        if a == 0:
            return 0
        return 1 if a in residues else -1

    m = q + 1
    h = [[0] * m for _ in range(m)]
    for j in range(m):
        h[0][j] = 1
    for i in range(1, m):
        h[i][0] = -1
    for i in range(1, m):
        for j in range(1, m):
            h[i][j] = chi(j - i) + (1 if i == j else 0)
    return h


def _hadamard_rows(m: int) -> Optional[list[list[int]]]:
    if m < 1:
        return None
    k = (m & -m).bit_length() - 1
    odd = m >> k
    if odd == 1:
        return _sylvester(k)
    # m = 2^a * (q + 1) with q prime, q = 3 mod 4
    for a in range(k + 1):
        core = m >> a
        q = core - 1
        if q % 4 == 3 and _is_prime(q):
            return _kron(_sylvester(a), _paley1(q))
    return None


def hadamard(m: int) -> HadamardMatrix:
    """Hadamard matrix of order ``m`` from Sylvester doubling and Paley I cores.

    Supported orders are powers of two and ``2^a * (q + 1)`` for a prime
    ``q = 3 (mod 4)``, which covers every Hadamard order up to 20 and the
    orders 2, 4, 8, 12 needed for regular simplices in dimensions 1, 3, 7, 11.
    """
    rows = _hadamard_rows(m)
    if rows is None:
        raise UnsupportedOrderError(f"no Sylvester/Paley construction for order {m}")
    h = HadamardMatrix(tuple(tuple(r) for r in rows))
    if not h.is_valid():
        raise AssertionError(f"constructed matrix of order {m} is not Hadamard")
    return h


def normalize_hadamard(h: HadamardMatrix) -> HadamardMatrix:
    """Flip column signs to make the first row +1, then row signs for the first column."""
    rows = [list(r) for r in h.entries]
    first = rows[0][:]
    rows = [[x * f for x, f in zip(r, first)] for r in rows]
    rows = [[x * r[0] for x in r] for r in rows]
    return HadamardMatrix(tuple(tuple(r) for r in rows))


# -- named simplices ---------------------------------------------------------

def regular_simplex(n: int) -> Simplex:
    """Regular simplex on vertices of the unit cube, for ``n + 1`` a Hadamard order.

    Each row of the normalized matrix is written in reverse, which moves the
    column of ones to the end; the remaining ``n`` entries give a vertex of
    ``[-1, 1]^n``, mapped to ``[0, 1]^n`` by ``x -> (x + 1) / 2``.
    """
    if n < 1:
        raise UnsupportedOrderError(f"dimension must be positive, got {n}")
    h = normalize_hadamard(hadamard(n + 1))
    signed = [tuple(reversed(r))[:n] for r in h.entries]
    return Simplex([[F(x + 1, 2) for x in v] for v in signed])


def regular_simplex_signed(n: int) -> Simplex:
    """Same construction left in the cube ``[-1, 1]^n``."""
    h = normalize_hadamard(hadamard(n + 1))
    return Simplex([tuple(reversed(r))[:n] for r in h.entries])


def s_star(n: int) -> Simplex:
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    verts = [[0 if i == j else 1 for i in range(n)] for j in range(n)]
    verts.append([0] * n)
    return Simplex(verts)


_NAMED = {
    "S1": [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)],
    "S2": [(HALF, 0, 0), (HALF, 1, 0), (0, HALF, 1), (1, HALF, 1)],
    "PERFECT5": [
        (HALF, 1, THIRD, 1, 1),
        (HALF, 0, THIRD, 1, 1),
        (HALF, HALF, THIRD, 0, 1),
        (HALF, HALF, 0, THIRD, 0),
        (0, HALF, 1, THIRD, 0),
        (1, HALF, 1, THIRD, 0),
    ],
}


def named(name: str) -> Simplex:
    try:
        return Simplex(_NAMED[name.upper()])
    except KeyError:
        raise UnknownConstructionError(f"unknown simplex name {name!r}") from None


# -- families ----------------------------------------------------------------

FAMILIES = ("R", "T", "S9")


@dataclass(frozen=True)
class FamilyParam:
    family: str
    t: Fraction
    s: Optional[Fraction] = None

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in FAMILIES:
            raise UnknownConstructionError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "t", as_rational(self.t))
        if fam == "R":
            if self.s is None:
                raise ValueError("family R needs both s and t")
            object.__setattr__(self, "s", as_rational(self.s))
        elif self.s is not None:
            raise ValueError(f"family {fam} takes only t")

    def in_cube_range(self) -> bool:
        if self.family == "R":
            return THIRD <= self.s <= 2 * THIRD and THIRD <= self.t <= 2 * THIRD
        return 0 <= self.t <= 1


def _family_r(s: Fraction, t: Fraction) -> list[tuple]:
    return [
        (s, 1, THIRD, 1, 1),
        (s, 0, THIRD, 1, 1),
        (s, 2 - 3 * t, THIRD, 0, 1),
        (2 - 3 * s, t, 0, THIRD, 0),
        (0, t, 1, THIRD, 0),
        (1, t, 1, THIRD, 0),
    ]


def _family_t(t: Fraction) -> list[tuple]:
    u = 1 - t
    return [
        (1, 0, 0, 0, 0, 0, 1),
        (1, 0, 1, t, 1, 1, 0),
        (0, 1, 1, u, 0, 1, 1),
        (0, 0, 0, t, 1, 1, 0),
        (0, 1, 1, u, 0, 0, 0),
        (1, 1, 0, t, 1, 1, 0),
        (0, 1, 1, u, 1, 0, 1),
        (1, 0, 0, 1, 0, 0, 1),
    ]


def _family_s9(t: Fraction) -> list[tuple]:
    u = 1 - t
    return [
        (1, 0, 0, 0, 0, 0, 0, 0, 1),
        (1, 1, 0, 1, t, 1, 1, 0, 0),
        (1, 0, 1, 1, u, 0, 1, 1, 0),
        (0, 1, 1, 1, t, 0, 0, 1, 1),
        (0, 1, 1, 0, u, 1, 0, 0, 0),
        (0, 0, 0, 1, t, 0, 1, 1, 0),
        (1, 1, 0, 0, u, 1, 1, 1, 0),
        (0, 1, 1, 0, t, 1, 1, 0, 1),
        (0, 0, 1, 1, u, 1, 0, 1, 1),
        (1, 0, 0, 0, 1, 0, 0, 0, 1),
    ]


def family_simplex(p: FamilyParam, require_cube: bool = True) -> Simplex:
    if require_cube and not p.in_cube_range():
        raise ValueError(f"parameters of {p.family} outside the cube-containment range")
    if p.family == "R":
        return Simplex(_family_r(p.s, p.t))
    if p.family == "T":
        return Simplex(_family_t(p.t))
    return Simplex(_family_s9(p.t))


@dataclass(frozen=True)
class ClosedForm:
    xi: Fraction
    alpha: Fraction
    M: Optional[Fraction] = None


def closed_form(p: FamilyParam) -> ClosedForm:
    """Piecewise closed-form xi and alpha for the R, T and S9 families."""
    t = p.t
    if p.family == "R":
        s = p.s
        m = max(2 * THIRD, 2 - 3 * s, 3 * s - 1, 2 - 3 * t, 3 * t - 1)
        parts = [
            abs(1 - 3 * s), abs(2 - 3 * s), abs(F(4, 3) - 3 * s), abs(F(5, 3) - 3 * s),
            abs(1 - 3 * t), abs(2 - 3 * t), abs(F(4, 3) - 3 * t), abs(F(5, 3) - 3 * t),
        ]
        alpha = (sum(parts) + F(22, 3)) / 2
        return ClosedForm(xi=6 * m + 1, alpha=alpha, M=m)
    if p.family == "T":
        lo, hi = F(1, 4), F(3, 4)
        alpha = (3 * abs(1 - 4 * t) + 3 * abs(3 - 4 * t) + 50) / 8
        if t < lo:
            xi = 10 - 12 * t
        elif t > hi:
            xi = 12 * t - 2
        else:
            xi = F(7)
        return ClosedForm(xi=xi, alpha=alpha)
    lo, hi = F(2, 5), F(3, 5)
    if t < lo:
        xi, alpha = 25 - 40 * t, F(61, 5) - 8 * t
    elif t > hi:
        xi, alpha = 40 * t - 15, 8 * t + F(21, 5)
    else:
        xi, alpha = F(9), F(9)
    return ClosedForm(xi=xi, alpha=alpha)


def parse_family(spec: str) -> FamilyParam:
    """Parse ``R:<s>:<t>``, ``T:<t>`` or ``S9:<t>``."""
    tag, *args = spec.split(":")
    tag = tag.upper()
    if tag == "R" and len(args) == 2:
        return FamilyParam("R", s=parse_rational(args[0]), t=parse_rational(args[1]))
    if tag in ("T", "S9") and len(args) == 1:
        return FamilyParam(tag, parse_rational(args[0]))
    raise UnknownConstructionError(f"bad family identifier {spec!r}")


def builtin(ident: str) -> Simplex:
    """Resolve a builtin identifier to a simplex."""
    head, _, rest = ident.partition(":")
    key = head.lower()
    if key in ("s1", "s2", "perfect5") and not rest:
        return named(key)
    if key in ("sstar", "regular"):
        try:
            n = int(rest)
        except ValueError:
            raise UnknownConstructionError(f"bad dimension in {ident!r}") from None
        return s_star(n) if key == "sstar" else regular_simplex(n)
    if key in ("r", "t", "s9"):
        return family_simplex(parse_family(ident))
    raise UnknownConstructionError(f"unknown builtin {ident!r}")
