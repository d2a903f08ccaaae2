"""
Jeu de taquin on type A skew tableaux.

A hole at an inner corner slides forward to an outer corner; a hole at an
outer corner slides back. Sliding every hole of a horizontal strip μ̃/μ,
right to left, carries an LR tableau on λ∨/μ̃ to one on λ̃∨/μ with λ → λ̃
a horizontal strip of the same size. Reverse slides undo the transfer.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from infra import SlideError, TransferError

from .lr_tableaux import Tableau, enumerate_lr, is_lr_tableau
from .shapes import (
    AmbientSpace,
    Cell,
    Partition,
    SkewShape,
    contains,
    horizontal_strip_successors,
    is_horizontal_strip,
)


# =============================================================================
# Traces
# =============================================================================

@dataclass(frozen=True, slots=True)
class SlideTrace:
    """One slide: where the hole started, every cell it occupied, the result.

    moves[i] names the move that took the hole from path[i] to path[i+1]:
    "vertical", "horizontal" or (shifted only) "special".
    """
    start: Cell
    path: Tuple[Cell, ...]
    result: Any
    moves: Tuple[str, ...] = field(default=())

    @property
    def end(self) -> Cell:
        return self.path[-1]


# =============================================================================
# Slides
# =============================================================================

def slide(tableau: Tableau, hole: Cell) -> SlideTrace:
    """Forward slide from an inner corner.

    The hole swaps with the entry below (a) when a <= b or there is no
    right entry (b); otherwise with b. It stops when neither exists.

    Raises:
        SlideError: if hole is not an inner corner
    """
    shape = tableau.shape
    if hole not in shape.inner_corners():
        raise SlideError(hole, "not an inner corner")

    grid = tableau.grid()
    r, c = hole
    path, moves = [hole], []
    while True:
        below = grid.get((r + 1, c))
        right = grid.get((r, c + 1))
        if below is None and right is None:
            break
        if right is None or (below is not None and below <= right):
            grid[(r, c)] = grid.pop((r + 1, c))
            r += 1
            moves.append("vertical")
        else:
            grid[(r, c)] = grid.pop((r, c + 1))
            c += 1
            moves.append("horizontal")
        path.append((r, c))

    outer = list(shape.outer)
    outer[r - 1] -= 1
    new_shape = SkewShape(_strip(outer), shape.without_inner(hole).inner)
    return SlideTrace(hole, tuple(path), Tableau.from_grid(new_shape, grid), tuple(moves))


def reverse_slide(tableau: Tableau, hole: Cell) -> SlideTrace:
    """Reverse slide from an outer corner.

    The hole swaps with the entry above (u) when u >= l or there is no
    left entry (l); otherwise with l. Exact inverse of slide.

    Raises:
        SlideError: if hole is not an outer corner
    """
    shape = tableau.shape
    if hole not in shape.outer_corners():
        raise SlideError(hole, "not an outer corner")

    grid = tableau.grid()
    r, c = hole
    path, moves = [hole], []
    while True:
        above = grid.get((r - 1, c))
        left = grid.get((r, c - 1))
        if above is None and left is None:
            break
        if left is None or (above is not None and above >= left):
            grid[(r, c)] = grid.pop((r - 1, c))
            r -= 1
            moves.append("vertical")
        else:
            grid[(r, c)] = grid.pop((r, c - 1))
            c -= 1
            moves.append("horizontal")
        path.append((r, c))

    grown = shape.with_outer(hole)
    inner = list(grown.inner) + [0] * max(0, r - len(grown.inner))
    inner[r - 1] += 1
    new_shape = SkewShape(grown.outer, _strip(inner))
    return SlideTrace(hole, tuple(path), Tableau.from_grid(new_shape, grid), tuple(moves))


def _strip(values: List[int]) -> Partition:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


# =============================================================================
# Pieri transfer
# =============================================================================

@dataclass(frozen=True, slots=True)
class PieriTransfer:
    """Outcome of a transfer: the new index partition, the new tableau, the slides."""
    partition: Partition
    tableau: Tableau
    traces: Tuple[SlideTrace, ...]


def _type_a(space: AmbientSpace) -> AmbientSpace:
    space = space.normalized()
    if space.kind != "A":
        raise TransferError(f"Pieri transfer needs a type A space, got {space.label}")
    return space


def strip_cells(outer: Partition, inner: Partition) -> List[Cell]:
    """Young cells of outer/inner, rightmost first."""
    cells = SkewShape(outer, inner).cells()
    return sorted(cells, key=lambda cell: (-cell[1], cell[0]))


def pieri_transfer(tableau: Tableau, mu: Partition, space: AmbientSpace) -> PieriTransfer:
    """Slide the holes of μ̃/μ (μ̃ = inner shape of tableau) right to left.

    Returns λ̃ with λ → λ̃, where λ∨ is the outer shape of tableau, and the
    LR tableau on λ̃∨/μ.

    Raises:
        TransferError: if tableau is not LR or μ̃/μ is not a horizontal strip
    """
    space = _type_a(space)
    if not is_lr_tableau(tableau):
        raise TransferError("Transfer input is not an LR tableau")
    mu_tilde = tableau.shape.inner
    if not is_horizontal_strip(mu_tilde, mu):
        raise TransferError(f"{mu_tilde}/{mu} is not a horizontal strip")

    current = tableau
    traces = []
    for hole in strip_cells(mu_tilde, mu):
        trace = slide(current, hole)
        traces.append(trace)
        current = trace.result

    lam_tilde = space.dual(current.shape.outer)
    return PieriTransfer(lam_tilde, current, tuple(traces))


def pieri_transfer_reverse(tableau: Tableau, lam: Partition, space: AmbientSpace) -> PieriTransfer:
    """Reverse-slide the cells of λ∨/λ̃∨ (λ̃∨ = outer shape of tableau) left to right.

    Returns μ̃ (the final inner shape) and the LR tableau on λ∨/μ̃.

    Raises:
        TransferError: if tableau is not LR or λ∨/λ̃∨ is not a horizontal strip
    """
    space = _type_a(space)
    if not is_lr_tableau(tableau):
        raise TransferError("Transfer input is not an LR tableau")
    lam_dual = space.dual(lam)
    if not is_horizontal_strip(lam_dual, tableau.shape.outer):
        raise TransferError(f"{lam_dual}/{tableau.shape.outer} is not a horizontal strip")

    current = tableau
    traces = []
    for hole in reversed(strip_cells(lam_dual, tableau.shape.outer)):
        trace = reverse_slide(current, hole)
        traces.append(trace)
        current = trace.result

    return PieriTransfer(current.shape.inner, current, tuple(traces))


def crossing_violations(traces: Tuple[SlideTrace, ...]) -> List[Tuple[int, int, Cell, Cell]]:
    """Pairs of positions where a later path is neither strictly left nor weakly below.

    Each violation is (earlier index, later index, earlier cell, later cell).
    """
    found = []
    for i, earlier in enumerate(traces):
        for j in range(i + 1, len(traces)):
            for later_cell in traces[j].path:
                for earlier_cell in earlier.path:
                    if not (later_cell[1] < earlier_cell[1] or later_cell[0] >= earlier_cell[0]):
                        found.append((i, j, earlier_cell, later_cell))
    return found


# =============================================================================
# Counting-identity families
# =============================================================================

@dataclass(frozen=True, slots=True)
class PieriFamily:
    """An LR tableau together with the strip partition that indexes it."""
    partition: Partition
    tableau: Tableau


def pieri_families(
    lam: Partition, mu: Partition, nu: Partition, p: int, space: AmbientSpace
) -> Dict[str, List[PieriFamily]]:
    """Both sides of Σ_{λ→λ̃} c(λ̃,μ;ν) = Σ_{μ→μ̃} c(λ,μ̃;ν) as explicit tableaux.

    "mu_side": LR tableaux on λ∨/μ̃ with content ν∨, for μ → μ̃
    "lambda_side": LR tableaux on λ̃∨/μ with content ν∨, for λ → λ̃
    """
    space = _type_a(space)
    lam_dual = space.dual(lam)
    content = space.dual(nu)
    mu_side, lambda_side = [], []
    for mu_tilde in horizontal_strip_successors(mu, p, space):
        if contains(lam_dual, mu_tilde):
            mu_side.extend(
                PieriFamily(mu_tilde, t) for t in enumerate_lr(SkewShape(lam_dual, mu_tilde), content)
            )
    for lam_tilde in horizontal_strip_successors(lam, p, space):
        lam_tilde_dual = space.dual(lam_tilde)
        if contains(lam_tilde_dual, mu):
            lambda_side.extend(
                PieriFamily(lam_tilde, t) for t in enumerate_lr(SkewShape(lam_tilde_dual, mu), content)
            )
    return {"mu_side": mu_side, "lambda_side": lambda_side}
