"""
Brute-force oracles from symmetric polynomials.

Schur polynomials and Schur P-polynomials are built as generating sums over
fillings, layer by layer (all entries equal to i form one layer), and
products are expanded back into the basis by leading-term elimination.
Nothing here uses lattice or LRS conditions or slides; the only thing
shared with the tableau engine is the Partition type.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, List, Optional, Tuple

import sympy as sp
from sympy import Poly

from combinatorics.shapes import Partition
from config import EngineConfig, default_config
from infra import OracleError


# =============================================================================
# Truncated polynomials
# =============================================================================

@lru_cache(maxsize=None)
def _gens(v: int) -> Tuple[sp.Symbol, ...]:
    return tuple(sp.symbols(f"x1:{v + 1}"))


@dataclass(frozen=True)
class TruncatedPolynomial:
    """Integer polynomial in v variables with terms above degree `degree` dropped."""
    poly: Poly
    degree: int

    @classmethod
    def from_dict(cls, terms: Dict[Tuple[int, ...], int], v: int, degree: int) -> "TruncatedPolynomial":
        kept = {exp: c for exp, c in terms.items() if c and sum(exp) <= degree}
        return cls(Poly.from_dict(kept, *_gens(v), domain="ZZ"), degree)

    @classmethod
    def one(cls, v: int, degree: int) -> "TruncatedPolynomial":
        return cls.from_dict({(0,) * v: 1}, v, degree)

    @property
    def variables(self) -> int:
        return len(self.poly.gens)

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def _truncate(self, poly: Poly, degree: int) -> "TruncatedPolynomial":
        if poly.is_zero or poly.total_degree() <= degree:
            return TruncatedPolynomial(poly, degree)
        terms = {exp: int(c) for exp, c in poly.terms() if sum(exp) <= degree}
        return TruncatedPolynomial.from_dict(terms, self.variables, degree)

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        # degrees add under multiplication
        return self._truncate(self.poly * other.poly, self.degree + other.degree)

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self._truncate(self.poly + other.poly, max(self.degree, other.degree))

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self._truncate(self.poly - other.poly, max(self.degree, other.degree))

    def truncated(self, degree: int) -> "TruncatedPolynomial":
        return self._truncate(self.poly, degree)

    def scale(self, factor: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.poly.mul_ground(factor), self.degree)

    def coefficient(self, exponent: Tuple[int, ...]) -> int:
        exponent = tuple(exponent) + (0,) * (self.variables - len(exponent))
        return int(self.poly.as_dict().get(exponent, 0))

    def leading_term(self) -> Tuple[Tuple[int, ...], int]:
        """Lex-leading (exponent, coefficient); x1 > x2 > ... ."""
        if self.is_zero:
            raise OracleError("Zero polynomial has no leading term")
        exponent, coeff = self.poly.terms(order="lex")[0]
        return exponent, int(coeff)

    def fillings(self) -> int:
        """Sum of all coefficients (number of fillings generated)."""
        return sum(int(c) for _, c in self.poly.terms()) if not self.is_zero else 0


# =============================================================================
# Layer counting
# =============================================================================

def _contained(lam: Partition, strict: bool) -> List[Partition]:
    """Every partition (strict if asked) whose diagram fits inside λ."""
    found = []

    def extend(acc: List[int]) -> None:
        found.append(tuple(acc))
        row = len(acc)
        if row == len(lam):
            return
        cap = lam[row] if not acc else min(lam[row], acc[-1] - (1 if strict else 0))
        for value in range(1, cap + 1):
            extend(acc + [value])

    extend([])
    return found


def _fits(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


def _layer_cells(outer: Partition, inner: Partition, shifted: bool) -> List[Tuple[int, int]]:
    cells = []
    for r in range(1, len(outer) + 1):
        shift = r - 1 if shifted else 0
        start = (inner[r - 1] if r <= len(inner) else 0) + shift + 1
        cells.extend((r, c) for c in range(start, outer[r - 1] + shift + 1))
    return cells


def _young_layer_fills(outer: Partition, inner: Partition) -> int:
    """Ways to fill outer/inner with one value: 1 unless two cells share a column."""
    columns = [c for _, c in _layer_cells(outer, inner, shifted=False)]
    return 1 if len(columns) == len(set(columns)) else 0


def _shifted_layer_fills(outer: Partition, inner: Partition) -> int:
    """Markings of a one-value layer of a shifted filling.

    In a row a marked cell may not follow an equal cell; in a column nothing
    may sit below an equal unmarked cell; diagonal cells stay unmarked.
    """
    cells = _layer_cells(outer, inner, shifted=True)
    total = 0
    for marks in cartesian((False, True), repeat=len(cells)):
        marked = dict(zip(cells, marks))
        ok = True
        for (r, c), is_marked in marked.items():
            if is_marked and r == c:
                ok = False
            elif (r, c - 1) in marked and is_marked:
                ok = False
            elif (r - 1, c) in marked and not marked[(r - 1, c)]:
                ok = False
            if not ok:
                break
        total += ok
    return total


def _generating_sum(lam: Partition, v: int, shifted: bool) -> TruncatedPolynomial:
    degree = sum(lam)
    gens = _gens(v)
    states = _contained(lam, strict=shifted)
    layer = _shifted_layer_fills if shifted else _young_layer_fills
    current: Dict[Partition, Poly] = {(): TruncatedPolynomial.one(v, degree).poly}
    for i in range(v):
        following: Dict[Partition, Poly] = {}
        for inner, poly in current.items():
            for outer in states:
                if not _fits(outer, inner):
                    continue
                ways = layer(outer, inner)
                if not ways:
                    continue
                step = sum(outer) - sum(inner)
                term = poly.mul_ground(ways) * Poly(gens[i] ** step, *gens, domain="ZZ")
                following[outer] = following[outer] + term if outer in following else term
        current = following
    poly = current.get(lam, Poly.from_dict({}, *gens, domain="ZZ"))
    return TruncatedPolynomial(poly, degree)


@lru_cache(maxsize=None)
def schur_polynomial(lam: Partition, v: int) -> TruncatedPolynomial:
    """s_λ(x1..xv) over semistandard fillings with entries ≤ v; zero when ℓ(λ) > v."""
    return _generating_sum(tuple(lam), v, shifted=False)


@lru_cache(maxsize=None)
def p_function(lam: Partition, v: int) -> TruncatedPolynomial:
    """P_λ(x1..xv) over marked shifted fillings of S(λ), unmarked diagonal."""
    return _generating_sum(tuple(lam), v, shifted=True)


# =============================================================================
# Coefficient extraction
# =============================================================================

def _is_partition(exp: Tuple[int, ...], strict: bool) -> bool:
    parts = list(exp)
    while parts and parts[-1] == 0:
        parts.pop()
    if 0 in parts:
        return False
    if strict:
        return all(a > b for a, b in zip(parts, parts[1:]))
    return all(a >= b for a, b in zip(parts, parts[1:]))


def _expand(target: TruncatedPolynomial, v: int, strict: bool) -> Dict[Partition, int]:
    """Greedy elimination: peel off c·basis(lead) while the lead exponent strictly drops."""
    basis_poly = p_function if strict else schur_polynomial
    found: Dict[Partition, int] = {}
    remaining = target
    previous: Optional[Tuple[int, ...]] = None
    while not remaining.is_zero:
        exponent, coeff = remaining.leading_term()
        if not _is_partition(exponent, strict):
            raise OracleError(f"Leading exponent {exponent} is not a{' strict' if strict else ''} partition")
        if previous is not None and exponent >= previous:
            raise OracleError(f"Leading exponent {exponent} did not drop below {previous}")
        lead = tuple(e for e in exponent if e)
        found[lead] = coeff
        remaining = remaining - basis_poly(lead, v).scale(coeff)
        previous = exponent
    return found


def schur_product_expansion(lam: Partition, mu: Partition, v: Optional[int] = None) -> Dict[Partition, int]:
    """s_λ·s_μ = Σ c_ν s_ν in v variables (default ℓ(λ)+ℓ(μ), which is faithful)."""
    v = v or max(1, len(lam) + len(mu))
    return _expand(schur_polynomial(tuple(lam), v) * schur_polynomial(tuple(mu), v), v, strict=False)


def p_product_expansion(lam: Partition, mu: Partition, v: Optional[int] = None) -> Dict[Partition, int]:
    """P_λ·P_μ = Σ f_ν P_ν in v variables (default |λ|+|μ|)."""
    v = v or max(1, sum(lam) + sum(mu))
    return _expand(p_function(tuple(lam), v) * p_function(tuple(mu), v), v, strict=True)


def schur_product_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Coefficient of s_ν in s_λ·s_μ, in ℓ(ν) variables."""
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    v = max(1, len(nu))
    return schur_product_expansion(lam, mu, v).get(tuple(nu), 0)


def p_product_coefficient(
    lam: Partition, mu: Partition, nu: Partition, config: Optional[EngineConfig] = None
) -> int:
    """Coefficient of P_ν in P_λ·P_μ; stable f(λ, μ; ν)."""
    config = config or default_config
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    v = config.oracle_p_variables or max(1, sum(lam) + sum(mu))
    return p_product_expansion(lam, mu, v).get(tuple(nu), 0)
