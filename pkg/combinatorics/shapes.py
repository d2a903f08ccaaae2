"""
Partitions, ambient spaces and skew shapes.

Provides:
- Partition helpers (tuples without trailing zeros) and literal parsing
- AmbientSpace: the rectangle (m^k) for type A, the staircase ρ_n for B/C/D
- SkewShape / CellSet: Young and shifted cell sets with corners and reading order
- Horizontal strip successors and border-strip component counting
"""

import re
from dataclasses import dataclass
from typing import Annotated, Iterable, Iterator, List, Literal, Tuple

from annotated_types import Ge
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from infra import ShapeError


Partition = Tuple[int, ...]
Cell = Tuple[int, int]
Flavor = Literal["young", "shifted"]


# =============================================================================
# Partitions
# =============================================================================

def make_partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros."""
    values = tuple(int(p) for p in parts)
    while values and values[-1] == 0:
        values = values[:-1]
    for i, value in enumerate(values):
        if value < 1:
            raise ShapeError("Partition parts must be positive", str(values))
        if i and value > values[i - 1]:
            raise ShapeError("Partition parts must weakly decrease", str(values))
    return values


def make_strict(parts: Iterable[int]) -> Partition:
    """Validate a strictly decreasing sequence (a strict partition)."""
    values = make_partition(parts)
    if not is_strict(values):
        raise ShapeError("Partition must be strict", str(values))
    return values


def is_strict(parts: Partition) -> bool:
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def weight(parts: Partition) -> int:
    return sum(parts)


def part(parts: Partition, row: int) -> int:
    """Row length for a 1-based row index; rows past the end are empty."""
    return parts[row - 1] if 1 <= row <= len(parts) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of inner sits inside the diagram of outer."""
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff outer/inner has at most one cell in each Young column."""
    if not contains(outer, inner):
        return False
    return all(part(outer, r + 1) <= part(inner, r) for r in range(1, len(outer) + 1))


def parse_partition(raw: str) -> Partition:
    """Parse a literal like "5,3,1"; the empty string is the empty partition.

    Raises:
        ShapeError: naming the offending token
    """
    text = raw.strip()
    if not text:
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not re.fullmatch(r"\d+", token):
            raise ShapeError("Invalid partition part", token)
        parts.append(int(token))
    return make_partition(parts)


def format_partition(parts: Partition) -> str:
    return ",".join(str(p) for p in parts)


def order_key(parts: Partition) -> tuple:
    """Basis order: ascending weight, then descending lexicographic."""
    return (weight(parts), tuple(-p for p in parts))


def term_key(parts: Partition) -> tuple:
    """Output order for expansions: descending weight, then descending lexicographic."""
    return (-weight(parts), tuple(-p for p in parts))


# =============================================================================
# Duals
# =============================================================================

def dual_partition(parts: Partition, k: int, m: int) -> Partition:
    """Complement of λ in the k×m rectangle, rotated: (m−λ_k, …, m−λ_1).

    Raises:
        ShapeError: if λ does not fit in (m^k)
    """
    if len(parts) > k or (parts and parts[0] > m):
        raise ShapeError(f"Partition does not fit in ({m}^{k})", format_partition(parts))
    return make_partition(m - part(parts, r) for r in range(k, 0, -1))


def staircase_complement(parts: Partition, n: int) -> Partition:
    """Parts of {1, …, n} missing from λ, in decreasing order.

    Raises:
        ShapeError: if λ is not strict or λ_1 > n
    """
    if not is_strict(parts) or (parts and parts[0] > n):
        raise ShapeError(f"Partition is not a strict partition inside rho_{n}", format_partition(parts))
    present = set(parts)
    return tuple(p for p in range(n, 0, -1) if p not in present)


# =============================================================================
# Ambient spaces
# =============================================================================

_SPACE_RE = re.compile(r"^\s*([ABCD])\s*:\s*(.*)$")
_PARAM_RE = re.compile(r"^\s*([kmn])\s*=\s*(\d+)\s*$")


class AmbientSpace(BaseModel):
    """A Grassmannian index set.

    - A: partitions inside the rectangle (m^k)
    - B, C: strict partitions inside the staircase ρ_n = (n, n−1, …, 1)
    - D: kept as given for labelling, computed as B(n−1)
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["A", "B", "C", "D"]
    k: Annotated[int, Ge(0)] = 0
    m: Annotated[int, Ge(0)] = 0
    n: Annotated[int, Ge(0)] = 0

    @model_validator(mode="after")
    def _check_bounds(self) -> "AmbientSpace":
        if self.kind == "A":
            if self.k < 1 or self.m < 1 or self.n:
                raise ValueError(f"type A needs k >= 1, m >= 1 and no n ({self.label})")
        elif self.k or self.m:
            raise ValueError(f"types B/C/D take only n ({self.label})")
        elif self.kind == "D" and self.n < 2:
            raise ValueError(f"type D needs n >= 2 ({self.label})")
        elif self.n < 1:
            raise ValueError(f"types B/C need n >= 1 ({self.label})")
        return self

    # --- constructors -------------------------------------------------------

    @classmethod
    def type_a(cls, k: int, m: int) -> "AmbientSpace":
        return cls(kind="A", k=k, m=m)

    @classmethod
    def type_b(cls, n: int) -> "AmbientSpace":
        return cls(kind="B", n=n)

    @classmethod
    def type_c(cls, n: int) -> "AmbientSpace":
        return cls(kind="C", n=n)

    @classmethod
    def type_d(cls, n: int) -> "AmbientSpace":
        return cls(kind="D", n=n)

    @classmethod
    def parse(cls, raw: str) -> "AmbientSpace":
        """Parse "A:k=3,m=5", "B:n=7", "C:n=7" or "D:n=8"."""
        match = _SPACE_RE.match(raw)
        if not match:
            raise ShapeError("Invalid space literal", raw)
        kind, rest = match.groups()
        params = {}
        for token in rest.split(","):
            param = _PARAM_RE.match(token)
            if not param or param.group(1) in params:
                raise ShapeError("Invalid space parameter", token.strip())
            params[param.group(1)] = int(param.group(2))
        expected = {"k", "m"} if kind == "A" else {"n"}
        if set(params) != expected:
            raise ShapeError(f"Space {kind} expects parameters {sorted(expected)}", raw)
        try:
            return cls(kind=kind, **params)
        except ValidationError as e:
            raise ShapeError("Invalid space bounds", raw) from e

    # --- descriptors --------------------------------------------------------

    @property
    def label(self) -> str:
        if self.kind == "A":
            return f"A:k={self.k},m={self.m}"
        return f"{self.kind}:n={self.n}"

    @property
    def is_shifted(self) -> bool:
        return self.kind != "A"

    def normalized(self) -> "AmbientSpace":
        """Type D(n) shares basis and constants with B(n−1)."""
        if self.kind == "D":
            return AmbientSpace(kind="B", n=self.n - 1)
        return self

    @property
    def rank(self) -> int:
        """n of the normalised staircase, or m for type A (largest special class)."""
        space = self.normalized()
        return space.m if space.kind == "A" else space.n

    @property
    def top(self) -> Partition:
        """The ambient shape itself: (m^k) or ρ_n."""
        space = self.normalized()
        if space.kind == "A":
            return (space.m,) * space.k
        return tuple(range(space.n, 0, -1))

    def contains(self, parts: Partition) -> bool:
        space = self.normalized()
        if space.kind == "A":
            return len(parts) <= space.k and (not parts or parts[0] <= space.m)
        return is_strict(parts) and (not parts or parts[0] <= space.n)

    def require(self, parts: Partition, name: str = "partition") -> Partition:
        """Return parts if they index a basis class, else raise ShapeError."""
        if not self.contains(parts):
            raise ShapeError(f"{name} is not in the basis of {self.label}", format_partition(parts))
        return parts

    def dual(self, parts: Partition) -> Partition:
        space = self.normalized()
        if space.kind == "A":
            return dual_partition(parts, space.k, space.m)
        return staircase_complement(parts, space.n)


# =============================================================================
# Cell sets and skew shapes
# =============================================================================

@dataclass(frozen=True, slots=True)
class CellSet:
    """Cells of a skew diagram, 1-based (row, column), row 1 on top."""
    cells: frozenset
    flavor: Flavor = "young"

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def components(self) -> List[frozenset]:
        """Edge-connected components, each as a frozenset of cells."""
        remaining = set(self.cells)
        found = []
        while remaining:
            start = min(remaining)
            remaining.discard(start)
            stack, group = [start], {start}
            while stack:
                r, c = stack.pop()
                for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if nb in remaining:
                        remaining.discard(nb)
                        group.add(nb)
                        stack.append(nb)
            found.append(frozenset(group))
        return found

    def has_square(self) -> bool:
        """True iff some 2×2 block of cells is fully present."""
        return any(
            (r, c + 1) in self.cells and (r + 1, c) in self.cells and (r + 1, c + 1) in self.cells
            for r, c in self.cells
        )


@dataclass(frozen=True, slots=True)
class SkewShape:
    """The skew diagram outer/inner, Young or shifted (row i indented by i−1)."""
    outer: Partition
    inner: Partition = ()
    shifted: bool = False

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ShapeError(
                "Inner shape is not contained in outer shape",
                f"{format_partition(self.outer)}/{format_partition(self.inner)}",
            )
        if self.shifted and not (is_strict(self.outer) and is_strict(self.inner)):
            raise ShapeError(
                "Shifted shapes need strict partitions",
                f"{format_partition(self.outer)}/{format_partition(self.inner)}",
            )

    @property
    def flavor(self) -> Flavor:
        return "shifted" if self.shifted else "young"

    @property
    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)

    @property
    def rows(self) -> int:
        return len(self.outer)

    def offset(self, row: int) -> int:
        return row - 1 if self.shifted else 0

    def row_span(self, row: int) -> Tuple[int, int]:
        """First and last column of the row (empty when first > last)."""
        shift = self.offset(row)
        return part(self.inner, row) + shift + 1, part(self.outer, row) + shift

    def __contains__(self, cell: object) -> bool:
        r, c = cell
        if r < 1 or r > len(self.outer):
            return False
        first, last = self.row_span(r)
        return first <= c <= last

    def cells(self) -> CellSet:
        found = set()
        for r in range(1, self.rows + 1):
            first, last = self.row_span(r)
            found.update((r, c) for c in range(first, last + 1))
        return CellSet(frozenset(found), self.flavor)

    def reading_order(self) -> Tuple[Cell, ...]:
        """Rows top to bottom, each row right to left."""
        order = []
        for r in range(1, self.rows + 1):
            first, last = self.row_span(r)
            order.extend((r, c) for c in range(last, first - 1, -1))
        return tuple(order)

    def is_diagonal(self, cell: Cell) -> bool:
        return self.shifted and cell[0] == cell[1]

    # --- corners ------------------------------------------------------------

    def inner_corners(self) -> List[Cell]:
        """Cells of the inner diagram whose removal leaves a valid inner shape."""
        corners = []
        for r in range(1, len(self.inner) + 1):
            shorter = part(self.inner, r) - 1
            if self.shifted:
                ok = shorter == 0 or shorter > part(self.inner, r + 1)
            else:
                ok = shorter >= part(self.inner, r + 1)
            if ok:
                corners.append((r, part(self.inner, r) + self.offset(r)))
        return corners

    def outer_corners(self) -> List[Cell]:
        """Cells outside the outer diagram whose addition leaves a valid outer shape."""
        corners = []
        for r in range(1, len(self.outer) + 2):
            longer = part(self.outer, r) + 1
            if self.shifted:
                ok = r == 1 or part(self.outer, r - 1) > longer
            else:
                ok = r == 1 or part(self.outer, r - 1) >= longer
            if ok:
                corners.append((r, longer + self.offset(r)))
        return corners

    def without_inner(self, cell: Cell) -> "SkewShape":
        """Shape after an inner corner cell becomes part of the skew diagram."""
        return SkewShape(self.outer, _bump(self.inner, cell[0], -1), self.shifted)

    def with_outer(self, cell: Cell) -> "SkewShape":
        return SkewShape(_bump(self.outer, cell[0], 1), self.inner, self.shifted)


def _bump(parts: Partition, row: int, delta: int) -> Partition:
    values = list(parts) + [0] * max(0, row - len(parts))
    values[row - 1] += delta
    return make_partition(values)


def young_cells(outer: Partition, inner: Partition = ()) -> CellSet:
    return SkewShape(outer, inner).cells()


def shifted_cells(outer: Partition, inner: Partition = ()) -> CellSet:
    return SkewShape(outer, inner, shifted=True).cells()


# =============================================================================
# Strips
# =============================================================================

def horizontal_strip_successors(parts: Partition, p: int, space: AmbientSpace) -> List[Partition]:
    """All λ̃ in the basis of space with λ ⊂ λ̃ and λ̃/λ a horizontal strip of p cells.

    Returned in basis order; p = 0 gives [λ].
    """
    space = space.normalized()
    space.require(parts)
    if space.kind == "A":
        max_rows, max_first = space.k, space.m
    else:
        max_rows, max_first = space.n, space.n

    rows = min(len(parts) + 1, max_rows)
    found: List[Partition] = []

    def extend(r: int, left: int, acc: List[int]) -> None:
        if r > rows:
            if left == 0:
                found.append(make_partition(acc))
            return
        base = part(parts, r)
        cap = max_first if r == 1 else part(parts, r - 1)
        for size in range(base, min(cap, base + left) + 1):
            extend(r + 1, left - (size - base), acc + [size])

    if p >= 0:
        extend(1, p, [])
    if space.is_shifted:
        found = [lam for lam in found if is_strict(lam)]
    return sorted(found, key=order_key)


@dataclass(frozen=True, slots=True)
class BorderStripData:
    components: int
    n_connected: int  # components − 1, floored at 0 for an empty difference

    def __iter__(self):
        return iter((self.components, self.n_connected))


def border_strip_data(outer: Partition, inner: Partition) -> BorderStripData:
    """Count edge-connected components of the shifted skew diagram outer/inner.

    When outer/inner is a horizontal strip each component must be a border
    strip (no 2×2 block); a violation raises ShapeError.

    Raises:
        ShapeError: if inner is not contained in outer
    """
    if not contains(outer, inner):
        raise ShapeError(
            "Inner shape is not contained in outer shape",
            f"{format_partition(outer)}/{format_partition(inner)}",
        )
    cell_set = shifted_cells(outer, inner)
    groups = cell_set.components()
    if is_horizontal_strip(outer, inner):
        for group in groups:
            if CellSet(group, "shifted").has_square():
                raise ShapeError(
                    "Strip component is not a border strip",
                    f"{format_partition(outer)}/{format_partition(inner)}",
                )
    return BorderStripData(len(groups), max(len(groups) - 1, 0))


def strip_exponent(outer: Partition, inner: Partition) -> int:
    """N(outer/inner): components of the shifted difference minus one."""
    return border_strip_data(outer, inner).n_connected
