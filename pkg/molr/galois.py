"""
molr/galois.py
Purpose: Finite fields GF(n) for n in {2, 3, 4, 5, 7, 8, 9}, the classical
         (n-1)-MOLS L_k(i, j) = a_i + a_k·a_j, its cyclic autotopism and the
         chain of stepwise-transitive row truncations.
Created: 2026-10-19
Last Updated: 2026-10-19

Field elements are integers whose base-p digits are the coefficients of a
polynomial in y over GF(p), least significant digit first. GF(p^r) is
GF(p)[y] modulo a fixed monic irreducible polynomial of degree r.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .core import Isotopism, MolrSet, validate_molr
from .errors import NotAPrimePower, NotGaloisConstruction, NTooSmall, UnsupportedFieldOrder
from .logging import get_logger
from .perms import identity
from .symmetry import apply, orbits_of

logger = get_logger('galois')

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# Low-to-high coefficients of the monic reduction polynomial
IRREDUCIBLE: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),     # y^2 + y + 1 over GF(2)
    8: (1, 1, 0, 1),  # y^3 + y + 1 over GF(2)
    9: (1, 0, 1),     # y^2 + 1 over GF(3)
}

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FieldTable:
    order: int
    p: int
    r: int
    add: Table
    mul: Table
    generator: int
    powers: Tuple[int, ...]  # a_0 = 0, a_1 = 1, a_i = x^(i-1)

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul[a].index(1)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        x, count = a, 1
        while x != 1:
            x = self.mul[x][a]
            count += 1
        return count


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, r) with n = p^r, or None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    r, m = 0, n
    while m % p == 0:
        m //= p
        r += 1
    return (p, r) if m == 1 else None


def _digits(a: int, p: int, r: int) -> List[int]:
    out = []
    for _ in range(r):
        out.append(a % p)
        a //= p
    return out


def _number(digits: List[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_mul(a: List[int], b: List[int], p: int, modulus: Tuple[int, ...]) -> List[int]:
    r = len(modulus) - 1
    prod = [0] * (2 * r - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic: y^r = -(lower terms)
    for deg in range(len(prod) - 1, r - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for i in range(r):
                prod[deg - r + i] = (prod[deg - r + i] - c * modulus[i]) % p
    return prod[:r]


@lru_cache(maxsize=None)
def field(n: int) -> FieldTable:
    pp = prime_power(n)
    if pp is None:
        raise NotAPrimePower(f"{n} is not a prime power")
    if n not in SUPPORTED_ORDERS:
        raise UnsupportedFieldOrder(f"GF({n}) is not supported; orders {SUPPORTED_ORDERS}")
    p, r = pp
    if r == 1:
        add = tuple(tuple((a + b) % p for b in range(n)) for a in range(n))
        mul = tuple(tuple((a * b) % p for b in range(n)) for a in range(n))
    else:
        modulus = IRREDUCIBLE[n]
        digits = [_digits(a, p, r) for a in range(n)]
        add = tuple(
            tuple(_number([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(n))
            for a in range(n)
        )
        mul = tuple(
            tuple(_number(_poly_mul(digits[a], digits[b], p, modulus), p) for b in range(n))
            for a in range(n)
        )
    partial = FieldTable(n, p, r, add, mul, 1, ())
    if n == 2:
        generator = 1
    else:
        generator = next(a for a in range(2, n) if partial.order_of(a) == n - 1)
    powers = [0, 1]
    while len(powers) < n:
        powers.append(mul[powers[-1]][generator])
    assert sorted(powers) == list(range(n)), "generator does not reach every element"
    return FieldTable(n, p, r, add, mul, generator, tuple(powers))


def galois_mols(n: int) -> MolrSet:
    """The n-1 squares L_k(i, j) = a_i + a_k·a_j, k = 1..n-1."""
    gf = field(n)
    if n < 3:
        raise NTooSmall(f"order {n} has no pair of orthogonal Latin squares")
    a = gf.powers
    squares = [
        [[gf.add[a[i]][gf.mul[a[k]][a[j]]] for j in range(n)] for i in range(n)]
        for k in range(1, n)
    ]
    return validate_molr(squares)


def cyclic_autotopism(n: int) -> Isotopism:
    """
    Multiplication by the generator x, seen on galois_mols(n).

    Columns j >= 1 shift j -> j+1 (n-1 wraps to 1) since a_{j+1} = x·a_j,
    column 0 is fixed, and square L_{k+1} moves to the slot of L_k. Rows and
    symbols are fixed.
    """
    t = n - 1
    col_perm = (0,) + tuple(j + 1 if j < n - 1 else 1 for j in range(1, n))
    rect_perm = tuple((q - 1) % t for q in range(t))
    ident = identity(n)
    return Isotopism(rect_perm, identity(n), col_perm, (ident,) * t)


def stepwise_truncation(m: MolrSet) -> List[MolrSet]:
    """
    The k×n restrictions to the first k rows, for k = n down to 2.

    The cyclic autotopism fixes every row and is transitive on the squares,
    so each truncation keeps it as an autotopism and stays transitive; both
    facts are checked and NotGaloisConstruction is raised otherwise.
    """
    n = m.n
    if m.k != n or m.t != n - 1:
        raise NotGaloisConstruction(f"expected an (n-1)-MOLS of order n, got {m.k}x{n} t={m.t}")
    psi = cyclic_autotopism(n)
    if apply(psi, m) != m:
        raise NotGaloisConstruction("multiplication by the generator is not an autotopism")
    chain = []
    for k in range(n, 1, -1):
        sub = m.restrict_rows(range(k))
        psi_k = Isotopism(psi.rect_perm, identity(k), psi.col_perm, psi.sym_perms)
        if apply(psi_k, sub) != sub or len(orbits_of([psi_k], m.t)) != 1:
            raise NotGaloisConstruction(f"the {k}x{n} truncation is not transitive")
        chain.append(sub)
    logger.debug(f"GF({n}): {len(chain)} transitive truncations")
    return chain
