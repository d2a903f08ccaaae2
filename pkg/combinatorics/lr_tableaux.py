"""
Type A tableaux and Littlewood-Richardson counting.

Provides:
- Filling: shape + row-wise entries, shared with marked tableaux
- Tableau: semistandard skew tableau (rows weak, columns strict)
- word_of / is_lattice_word / is_lr_tableau
- enumerate_lr / count_lr: reading-order backtracking with lattice pruning
- lr_coefficient in "paper" (λ∨/μ, content ν∨) and "standard" (ν/λ, content μ) conventions
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Literal, Optional, Tuple

from infra import ShapeError, SpaceMismatch

from .shapes import (
    AmbientSpace,
    Cell,
    Partition,
    SkewShape,
    contains,
    weight,
)


Convention = Literal["paper", "standard"]
Word = Tuple[int, ...]


# =============================================================================
# Fillings
# =============================================================================

@dataclass(frozen=True, slots=True)
class Filling:
    """Entries of a skew shape stored row by row, left to right.

    rows[r-1] covers the columns of SkewShape.row_span(r).
    """
    shape: SkewShape
    rows: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.shape.rows:
            raise ShapeError("Row count does not match shape", str(self.shape.outer))
        for r, row in enumerate(self.rows, start=1):
            first, last = self.shape.row_span(r)
            if len(row) != max(0, last - first + 1):
                raise ShapeError(f"Row {r} length does not match shape", str(row))

    @classmethod
    def from_grid(cls, shape: SkewShape, grid: Dict[Cell, Any]):
        rows = []
        for r in range(1, shape.rows + 1):
            first, last = shape.row_span(r)
            rows.append(tuple(grid[(r, c)] for c in range(first, last + 1)))
        return cls(shape, tuple(rows))

    def grid(self) -> Dict[Cell, Any]:
        found = {}
        for r, row in enumerate(self.rows, start=1):
            first, _ = self.shape.row_span(r)
            for offset, value in enumerate(row):
                found[(r, first + offset)] = value
        return found

    def entry(self, cell: Cell) -> Optional[Any]:
        if cell not in self.shape:
            return None
        r, c = cell
        first, _ = self.shape.row_span(r)
        return self.rows[r - 1][c - first]

    def word(self) -> tuple:
        """Rows top to bottom, each row read right to left."""
        return tuple(value for row in self.rows for value in reversed(row))

    @property
    def offsets(self) -> Tuple[int, ...]:
        """Inner row lengths, one per row (the serialised inner shape)."""
        return tuple(self.shape.inner[r] if r < len(self.shape.inner) else 0 for r in range(self.shape.rows))


@dataclass(frozen=True, slots=True)
class Tableau(Filling):
    """Semistandard skew tableau of Young shape with positive integer entries."""

    def __post_init__(self):
        Filling.__post_init__(self)
        if self.shape.shifted:
            raise ShapeError("Tableau needs a Young shape", str(self.shape.outer))
        grid = self.grid()
        for (r, c), value in grid.items():
            if not isinstance(value, int) or value < 1:
                raise ShapeError("Entries must be positive integers", f"{(r, c)}={value!r}")
            left = grid.get((r, c - 1))
            if left is not None and left > value:
                raise ShapeError("Rows must weakly increase", f"row {r}")
            above = grid.get((r - 1, c))
            if above is not None and above >= value:
                raise ShapeError("Columns must strictly increase", f"column {c}")

    def content(self) -> Tuple[int, ...]:
        """counts[i-1] = number of entries equal to i."""
        values = self.word()
        if not values:
            return ()
        counts = [0] * max(values)
        for value in values:
            counts[value - 1] += 1
        return tuple(counts)


def word_of(tableau: Filling) -> tuple:
    return tableau.word()


# =============================================================================
# Lattice words
# =============================================================================

def is_lattice_word(word: Word) -> bool:
    """True iff every prefix has at least as many i as i+1, for all i."""
    counts: Dict[int, int] = {}
    for symbol in word:
        counts[symbol] = counts.get(symbol, 0) + 1
        if symbol > 1 and counts[symbol] > counts.get(symbol - 1, 0):
            return False
    return True


def is_lr_tableau(tableau: Tableau) -> bool:
    return is_lattice_word(tableau.word())


# =============================================================================
# Enumeration
# =============================================================================

def _fill_lr(shape: SkewShape, content: Tuple[int, ...]) -> Iterator[Dict[Cell, int]]:
    """Yield every LR filling as a grid, in lexicographic reading-order."""
    order = shape.reading_order()
    if weight(content) != len(order):
        return
    top = len(content)
    counts = [0] * (top + 2)
    grid: Dict[Cell, int] = {}

    def place(index: int) -> Iterator[Dict[Cell, int]]:
        if index == len(order):
            yield dict(grid)
            return
        r, c = order[index]
        above = grid.get((r - 1, c))
        right = grid.get((r, c + 1))
        low = above + 1 if above is not None else 1
        high = min(right, top) if right is not None else top
        for value in range(low, high + 1):
            if counts[value] >= content[value - 1]:
                continue
            # lattice prefix: a new i must stay below the count of i-1
            if value > 1 and counts[value] >= counts[value - 1]:
                continue
            counts[value] += 1
            grid[(r, c)] = value
            yield from place(index + 1)
            del grid[(r, c)]
            counts[value] -= 1

    yield from place(0)


def enumerate_lr(shape: SkewShape, content: Tuple[int, ...]) -> List[Tableau]:
    """All LR tableaux of the given shape and content, each exactly once."""
    return [Tableau.from_grid(shape, grid) for grid in _fill_lr(shape, tuple(content))]


def count_lr(shape: SkewShape, content: Tuple[int, ...]) -> int:
    return sum(1 for _ in _fill_lr(shape, tuple(content)))


# =============================================================================
# Coefficients
# =============================================================================

def lr_coefficient(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    space: AmbientSpace,
    convention: Convention = "paper",
) -> int:
    """c(λ, μ; ν) for the Grassmannian G(k, k+m).

    paper:    LR tableaux of shape λ∨/μ with content ν∨ (0 if μ ⊄ λ∨)
    standard: LR tableaux of shape ν/λ with content μ (0 if λ ⊄ ν or weights differ)

    Raises:
        SpaceMismatch: if space is not of type A
        ShapeError: if an index is outside (m^k)
    """
    if space.normalized().kind != "A":
        raise SpaceMismatch("type A", space.label)
    space.require(lam, "lambda")
    space.require(mu, "mu")
    space.require(nu, "nu")

    if convention == "paper":
        lam_dual = space.dual(lam)
        if not contains(lam_dual, mu):
            return 0
        return count_lr(SkewShape(lam_dual, mu), space.dual(nu))
    if not contains(nu, lam) or weight(lam) + weight(mu) != weight(nu):
        return 0
    return count_lr(SkewShape(nu, lam), mu)
