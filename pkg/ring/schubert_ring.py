"""
The formal ring with Schubert-symbol basis.

Provides:
- RingElement: finite integer combinations of basis partitions of one space
- SchubertRing: structure constants (c, f or e) with a memoised product table
- module-level basis / structure_constant / multiply / pieri_multiply / verify_space
- pieri_identity_violations: the strip counting identities on c and f
"""

import threading
import time
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field

from combinatorics import (
    AmbientSpace,
    Convention,
    Partition,
    format_partition,
    horizontal_strip_successors,
    lr_coefficient,
    lrs_coefficient,
    order_key,
    strip_exponent,
    term_key,
    weight,
)
from combinatorics.shapes import dual_partition
from config import EngineConfig, default_config
from infra import (
    CLI_BLUE,
    CLI_GREEN,
    CLI_RED,
    CoefficientError,
    ShapeError,
    SpaceMismatch,
    check_coefficient,
    log_event,
)
from infra.run_log import write_entry

from .ring_cfg import CHECKS, MAX_VIOLATION_RECORDS, PROGRESS_EVERY, TERM_SYMBOL


# =============================================================================
# Ring elements
# =============================================================================

@dataclass(frozen=True, slots=True)
class RingElement:
    """Σ coeff·s_λ over the basis of one (normalised) space; no zero terms."""
    space: AmbientSpace
    terms: Tuple[Tuple[Partition, int], ...] = ()

    @classmethod
    def from_terms(cls, space: AmbientSpace, terms: Dict[Partition, int]) -> "RingElement":
        space = space.normalized()
        for lam in terms:
            space.require(lam)
        kept = sorted(((lam, c) for lam, c in terms.items() if c), key=lambda item: term_key(item[0]))
        return cls(space, tuple(kept))

    def as_dict(self) -> Dict[Partition, int]:
        return dict(self.terms)

    def coefficient(self, lam: Partition) -> int:
        return self.as_dict().get(lam, 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _same_space(self, other: "RingElement") -> None:
        if self.space.label != other.space.label:
            raise SpaceMismatch(self.space.label, other.space.label)

    def __add__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._same_space(other)
        total = self.as_dict()
        for lam, c in other.terms:
            total[lam] = total.get(lam, 0) + c
        return RingElement.from_terms(self.space, total)

    def __sub__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other: Any) -> "RingElement":
        if isinstance(other, RingElement):
            return multiply(self, other)
        if isinstance(other, int):
            return RingElement.from_terms(self.space, {lam: c * other for lam, c in self.terms})
        return NotImplemented

    def __rmul__(self, other: Any) -> "RingElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.terms:
            symbol = f"{TERM_SYMBOL}({format_partition(lam)})"
            pieces.append(symbol if c == 1 else f"{c}*{symbol}")
        return " + ".join(pieces)


def basis_element(space: AmbientSpace, lam: Partition) -> RingElement:
    return RingElement.from_terms(space, {lam: 1})


def identity(space: AmbientSpace) -> RingElement:
    return basis_element(space, ())


# =============================================================================
# Structure constants
# =============================================================================

def _power_of_two_scale(f: int, exponent: int) -> int:
    """f·2^exponent, which must be an integer."""
    if f == 0:
        return 0
    if exponent >= 0:
        return f << exponent
    divisor = 1 << -exponent
    if f % divisor:
        raise CoefficientError(f"2^{exponent} * {f} is not an integer")
    return f // divisor


class SchubertRing:
    """Structure constants of one ambient space.

    Type A uses c, types B and D use f (D(n) computed as B(n−1)) and type C
    uses e = 2^{ℓ(λ)+ℓ(μ)−ℓ(ν)}·f. Product expansions are memoised per
    (λ, μ); the table is shared between threads.
    """

    def __init__(self, space: AmbientSpace, config: Optional[EngineConfig] = None):
        self.space = space.normalized()
        self.config = config or default_config
        self._products: Dict[Tuple[Partition, Partition], Dict[Partition, int]] = {}
        self._lock = threading.Lock()
        self._basis = self._build_basis()

    # --- basis --------------------------------------------------------------

    def _build_basis(self) -> List[Partition]:
        found: List[Partition] = []
        if self.space.kind == "A":
            k, m = self.space.k, self.space.m

            def extend(acc: List[int]) -> None:
                found.append(tuple(acc))
                if len(acc) == k:
                    return
                cap = acc[-1] if acc else m
                for value in range(1, cap + 1):
                    extend(acc + [value])

            extend([])
        else:
            n = self.space.n
            for mask in range(1 << n):
                found.append(tuple(v for v in range(n, 0, -1) if mask >> (v - 1) & 1))
        return sorted(found, key=order_key)

    def basis(self) -> List[Partition]:
        return list(self._basis)

    # --- constants ----------------------------------------------------------

    def _raw_constant(self, lam: Partition, mu: Partition, nu: Partition, convention: Convention = "paper") -> int:
        if weight(nu) != weight(lam) + weight(mu):
            return 0
        if self.space.kind == "A":
            return lr_coefficient(lam, mu, nu, self.space, convention)
        f = lrs_coefficient(lam, mu, nu, self.space.n, convention)
        if self.space.kind == "C":
            return _power_of_two_scale(f, len(lam) + len(mu) - len(nu))
        return f

    def _compute_product(self, lam: Partition, mu: Partition) -> Dict[Partition, int]:
        target = weight(lam) + weight(mu)
        found = {}
        for nu in self._basis:
            if weight(nu) != target:
                continue
            value = check_coefficient(self._raw_constant(lam, mu, nu), self.config.max_coefficient)
            if value:
                found[nu] = value
        return found

    def product(self, lam: Partition, mu: Partition) -> Dict[Partition, int]:
        """s_λ·s_μ as {ν: constant}; memoised."""
        key = (lam, mu)
        with self._lock:
            cached = self._products.get(key)
        if cached is not None:
            return dict(cached)
        self.space.require(lam, "lambda")
        self.space.require(mu, "mu")
        found = self._compute_product(lam, mu)
        with self._lock:
            self._products.setdefault(key, found)
        return dict(found)

    def constant(self, lam: Partition, mu: Partition, nu: Partition, convention: Convention = "paper") -> int:
        """One structure constant; the standard convention counts tableaux on ν/λ instead."""
        self.space.require(lam, "lambda")
        self.space.require(mu, "mu")
        self.space.require(nu, "nu")
        if convention == "paper":
            with self._lock:
                cached = self._products.get((lam, mu))
            if cached is not None:
                return cached.get(nu, 0)
        return check_coefficient(self._raw_constant(lam, mu, nu, convention), self.config.max_coefficient)

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        for element in (a, b):
            if element.space.label != self.space.label:
                raise SpaceMismatch(self.space.label, element.space.label)
        total: Dict[Partition, int] = {}
        for lam, x in a.terms:
            for mu, y in b.terms:
                for nu, c in self.product(lam, mu).items():
                    total[nu] = check_coefficient(total.get(nu, 0) + x * y * c, self.config.max_coefficient)
        return RingElement.from_terms(self.space, total)

    # --- Pieri --------------------------------------------------------------

    def special_range(self) -> range:
        return range(1, self.space.rank + 1)

    def pieri_terms(self, lam: Partition, p: int) -> Dict[Partition, int]:
        """s_(p)·s_λ from strip successors and 2^N weights, without tableaux."""
        if p not in self.special_range():
            raise ShapeError(f"Special class index out of range for {self.space.label}", str(p))
        found = {}
        for nu in horizontal_strip_successors(lam, p, self.space):
            if self.space.kind == "A":
                found[nu] = 1
                continue
            f = 1 << strip_exponent(nu, lam)
            if self.space.kind == "C":
                f = _power_of_two_scale(f, len(lam) + 1 - len(nu))
            found[nu] = check_coefficient(f, self.config.max_coefficient)
        return found

    def pieri_multiply(self, p: int, x: RingElement) -> RingElement:
        if x.space.label != self.space.label:
            raise SpaceMismatch(self.space.label, x.space.label)
        total: Dict[Partition, int] = {}
        for lam, c in x.terms:
            for nu, w in self.pieri_terms(lam, p).items():
                total[nu] = total.get(nu, 0) + c * w
        return RingElement.from_terms(self.space, total)


# =============================================================================
# Ring registry and module-level operations
# =============================================================================

_rings: Dict[Tuple[str, int], SchubertRing] = {}
_rings_lock = threading.Lock()


def get_ring(space: AmbientSpace, config: Optional[EngineConfig] = None) -> SchubertRing:
    """Shared ring per (normalised space, coefficient limit)."""
    config = config or default_config
    key = (space.normalized().label, config.max_coefficient)
    with _rings_lock:
        ring = _rings.get(key)
        if ring is None:
            ring = SchubertRing(space, config)
            _rings[key] = ring
        return ring


def basis(space: AmbientSpace) -> List[Partition]:
    return get_ring(space).basis()


def structure_constant(lam: Partition, mu: Partition, nu: Partition, space: AmbientSpace) -> int:
    return get_ring(space).constant(lam, mu, nu)


def multiply(a: RingElement, b: RingElement) -> RingElement:
    if a.space.label != b.space.label:
        raise SpaceMismatch(a.space.label, b.space.label)
    return get_ring(a.space).multiply(a, b)


def pieri_multiply(p: int, x: RingElement) -> RingElement:
    return get_ring(x.space).pieri_multiply(p, x)


# =============================================================================
# Counting identities
# =============================================================================

def pieri_identity_violations(
    space: AmbientSpace, p: int, config: Optional[EngineConfig] = None
) -> Tuple[int, List[Dict[str, Any]]]:
    """Check Σ_{λ→λ̃} w·C(λ̃,μ;ν) = Σ_{μ→μ̃} w·C(λ,μ̃;ν) over all basis triples.

    C is c with w = 1 for type A and f with w = 2^N for types B/C/D.
    Returns (cases checked, violations).
    """
    ring = get_ring(space, config)
    shifted = ring.space.kind != "A"
    # the shifted identity is stated on f, so type C reads its B twin
    source = get_ring(AmbientSpace.type_b(ring.space.n), config) if ring.space.kind == "C" else ring
    violations = []
    cases = 0
    successors = {lam: horizontal_strip_successors(lam, p, ring.space) for lam in ring.basis()}

    def side(fixed_first: bool, lam: Partition, mu: Partition, nu: Partition) -> int:
        total = 0
        moving = mu if fixed_first else lam
        for grown in successors[moving]:
            w = 1 << strip_exponent(grown, moving) if shifted else 1
            pair = (lam, grown) if fixed_first else (grown, mu)
            total += w * source.product(*pair).get(nu, 0)
        return total

    for lam in ring.basis():
        for mu in ring.basis():
            for nu in ring.basis():
                if weight(nu) != weight(lam) + weight(mu) + p:
                    continue
                cases += 1
                left = side(False, lam, mu, nu)
                right = side(True, lam, mu, nu)
                if left != right:
                    violations.append({
                        "p": p, "lambda": list(lam), "mu": list(mu), "nu": list(nu),
                        "lambda_side": left, "mu_side": right,
                    })
    return cases, violations


# =============================================================================
# Verification
# =============================================================================

class Violation(BaseModel):
    check: str
    detail: Dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseModel):
    name: str
    cases: int = 0
    violations: int = 0
    duration_sec: float = 0.0


class VerificationReport(BaseModel):
    """Outcome of verify_space; violations are data, never exceptions."""
    space: str
    basis_size: int
    checks: List[CheckResult] = Field(default_factory=list)
    violations: List[Violation] = Field(default_factory=list)
    total_violations: int = 0

    @property
    def ok(self) -> bool:
        return self.total_violations == 0


def _terms(element: RingElement) -> List[List[Any]]:
    return [[list(lam), c] for lam, c in element.terms]


class _Recorder:
    """Collects violations for one report, logging each to violations.jsonl."""

    def __init__(self, report: VerificationReport):
        self.report = report
        self.current: Optional[CheckResult] = None
        self.started = 0.0

    def begin(self, name: str) -> None:
        self.current = CheckResult(name=name)
        self.started = time.time()

    def case(self) -> None:
        self.current.cases += 1

    def fail(self, detail: Dict[str, Any]) -> None:
        self.current.violations += 1
        self.report.total_violations += 1
        entry = {"space": self.report.space, "check": self.current.name, **detail}
        write_entry("violations", entry)
        if len(self.report.violations) < MAX_VIOLATION_RECORDS:
            self.report.violations.append(Violation(check=self.current.name, detail=detail))

    def end(self) -> None:
        self.current.duration_sec = round(time.time() - self.started, 3)
        self.report.checks.append(self.current)
        color = CLI_GREEN if self.current.violations == 0 else CLI_RED
        log_event(
            f"[{self.report.space}] {self.current.name}: "
            f"{self.current.cases} cases, {self.current.violations} violations "
            f"({self.current.duration_sec}s)",
            color,
        )


def _reachable_by_pieri(ring: SchubertRing) -> set:
    reached = {()}
    queue = deque([()])
    while queue:
        lam = queue.popleft()
        for p in ring.special_range():
            for nu, c in ring.pieri_terms(lam, p).items():
                if c and nu not in reached:
                    reached.add(nu)
                    queue.append(nu)
    return reached


def verify_space(
    space: AmbientSpace,
    config: Optional[EngineConfig] = None,
    checks: Iterable[str] = CHECKS,
) -> VerificationReport:
    """Run the ring identities over every basis pair/triple of space."""
    config = config or default_config
    ring = get_ring(space, config)
    elements = {lam: basis_element(ring.space, lam) for lam in ring.basis()}
    one = identity(ring.space)
    report = VerificationReport(space=ring.space.label, basis_size=len(elements))
    rec = _Recorder(report)
    wanted = set(checks)
    log_event(f"[{report.space}] verifying {len(elements)} basis classes", CLI_BLUE)

    if "grading" in wanted:
        rec.begin("grading")
        for lam in elements:
            for mu in elements:
                rec.case()
                for nu in ring.product(lam, mu):
                    if weight(nu) != weight(lam) + weight(mu):
                        rec.fail({"lambda": list(lam), "mu": list(mu), "nu": list(nu)})
        rec.end()

    if "identity" in wanted:
        rec.begin("identity")
        for lam, x in elements.items():
            rec.case()
            if ring.multiply(one, x) != x or ring.multiply(x, one) != x:
                rec.fail({"lambda": list(lam)})
        rec.end()

    if "commutativity" in wanted:
        rec.begin("commutativity")
        for lam, x in elements.items():
            for mu, y in elements.items():
                if order_key(mu) < order_key(lam):
                    continue
                rec.case()
                xy, yx = ring.multiply(x, y), ring.multiply(y, x)
                if xy != yx:
                    rec.fail({"lambda": list(lam), "mu": list(mu), "xy": _terms(xy), "yx": _terms(yx)})
        rec.end()

    if "associativity" in wanted:
        rec.begin("associativity")
        for lam, x in elements.items():
            for mu, y in elements.items():
                xy = ring.multiply(x, y)
                for nu, z in elements.items():
                    rec.case()
                    if rec.current.cases % PROGRESS_EVERY == 0:
                        log_event(f"[{report.space}] associativity: {rec.current.cases} triples")
                    left = ring.multiply(xy, z)
                    right = ring.multiply(x, ring.multiply(y, z))
                    if left != right:
                        rec.fail({
                            "lambda": list(lam), "mu": list(mu), "nu": list(nu),
                            "left": _terms(left), "right": _terms(right),
                        })
        rec.end()

    if "pieri" in wanted:
        rec.begin("pieri")
        for p in ring.special_range():
            special = elements[(p,)]
            for lam, x in elements.items():
                rec.case()
                direct = ring.pieri_multiply(p, x)
                full = ring.multiply(special, x)
                if direct != full:
                    rec.fail({"p": p, "lambda": list(lam), "pieri": _terms(direct), "product": _terms(full)})
        rec.end()

    if "duality" in wanted and ring.space.kind == "A":
        rec.begin("duality")
        top = ring.space.top
        for lam in elements:
            dual = dual_partition(lam, ring.space.k, ring.space.m)
            for mu in elements:
                rec.case()
                expected = 1 if mu == dual else 0
                got = ring.product(lam, mu).get(top, 0)
                if got != expected:
                    rec.fail({"lambda": list(lam), "mu": list(mu), "expected": expected, "got": got})
        rec.end()

    if "generation" in wanted:
        rec.begin("generation")
        reached = _reachable_by_pieri(ring)
        for lam in elements:
            rec.case()
            if lam not in reached:
                rec.fail({"lambda": list(lam)})
        rec.end()

    if "pieri_identity" in wanted:
        rec.begin("pieri_identity")
        max_p = config.pieri_identity_max_p
        top_p = ring.space.rank if max_p is None else min(max_p, ring.space.rank)
        for p in range(0, top_p + 1):
            cases, found = pieri_identity_violations(ring.space, p, config)
            rec.current.cases += cases
            for detail in found:
                rec.fail(detail)
        rec.end()

    return report


# =============================================================================
# Relations between spaces
# =============================================================================

def type_c_relation_violations(n: int, config: Optional[EngineConfig] = None) -> List[Dict[str, Any]]:
    """Triples of C(n) where e ≠ 2^{ℓ(λ)+ℓ(μ)−ℓ(ν)}·f.

    Consistency check of the C ring against the B ring: it covers the C
    products and the scaling, not the LRS counts they share.

    Raises:
        CoefficientError: if some 2^{ℓ(λ)+ℓ(μ)−ℓ(ν)}·f is not an integer
    """
    ring_b = get_ring(AmbientSpace.type_b(n), config)
    ring_c = get_ring(AmbientSpace.type_c(n), config)
    found = []
    for lam in ring_b.basis():
        for mu in ring_b.basis():
            products_b = ring_b.product(lam, mu)
            products_c = ring_c.product(lam, mu)
            for nu in set(products_b) | set(products_c):
                f = products_b.get(nu, 0)
                expected = _power_of_two_scale(f, len(lam) + len(mu) - len(nu))
                if products_c.get(nu, 0) != expected:
                    found.append({"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                                  "e": products_c.get(nu, 0), "f": f})
    return found


def special_pieri_relation_violations(n: int, config: Optional[EngineConfig] = None) -> List[Dict[str, Any]]:
    """Pairs λ, ν of B(n) where f(λ,(p);ν) ≠ 2^{N(ν/λ)}·[λ →p ν]."""
    ring = get_ring(AmbientSpace.type_b(n), config)
    found = []
    for p in ring.special_range():
        for lam in ring.basis():
            for nu in ring.basis():
                if weight(nu) != weight(lam) + p:
                    continue
                is_strip = nu in horizontal_strip_successors(lam, p, ring.space)
                expected = 1 << strip_exponent(nu, lam) if is_strip else 0
                got = ring.constant(lam, (p,), nu)
                if got != expected:
                    found.append({"p": p, "lambda": list(lam), "nu": list(nu), "expected": expected, "got": got})
    return found

