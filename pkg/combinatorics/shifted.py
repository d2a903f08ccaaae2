"""
Shifted tableaux over the marked alphabet 1' < 1 < 2' < 2 < ...

Provides:
- MarkedSymbol, MarkedTableau, hat_word and the LRS word/tableau predicates
- enumerate_lrs / count_lrs / lrs_coefficient (the constants f of OG(n, 2n+1))
- shifted_slide / reverse_shifted_slide, including the diagonal special slide
- hole strips on the NW and SE borders and the transfers between them
- path_persistence_violations: west/north persistence between consecutive paths
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Literal, Optional, Tuple

from infra import ShapeError, SlideError, TransferError

from .jdt import SlideTrace
from .lr_tableaux import Convention, Filling
from .shapes import (
    AmbientSpace,
    Cell,
    Partition,
    SkewShape,
    contains,
    horizontal_strip_successors,
    is_horizontal_strip,
    is_strict,
    make_partition,
    shifted_cells,
    staircase_complement,
    weight,
)


HoleSide = Literal["NW", "SE"]


# =============================================================================
# Marked alphabet
# =============================================================================

@dataclass(frozen=True, slots=True)
class MarkedSymbol:
    """i' (marked) or i (unmarked); i' sorts just below i."""
    value: int
    marked: bool = False

    @property
    def code(self) -> int:
        return 2 * self.value - 1 if self.marked else 2 * self.value

    def __lt__(self, other: "MarkedSymbol") -> bool:
        return self.code < other.code

    def __le__(self, other: "MarkedSymbol") -> bool:
        return self.code <= other.code

    def __gt__(self, other: "MarkedSymbol") -> bool:
        return self.code > other.code

    def __ge__(self, other: "MarkedSymbol") -> bool:
        return self.code >= other.code

    def __str__(self) -> str:
        return f"{self.value}'" if self.marked else str(self.value)

    @classmethod
    def parse(cls, raw: str) -> "MarkedSymbol":
        text = raw.strip()
        marked = text.endswith("'")
        digits = text[:-1] if marked else text
        if not digits.isdigit() or int(digits) < 1:
            raise ShapeError("Invalid marked symbol", raw)
        return cls(int(digits), marked)


MarkedWord = Tuple[MarkedSymbol, ...]


def _symbols(top: int) -> List[MarkedSymbol]:
    """Alphabet up to top, in increasing order."""
    return [MarkedSymbol(v, marked) for v in range(1, top + 1) for marked in (True, False)]


# =============================================================================
# Marked tableaux
# =============================================================================

@dataclass(frozen=True, slots=True)
class MarkedTableau(Filling):
    """Shifted skew tableau: rows and columns weakly increase, at most one i'
    per row and at most one i per column."""

    def __post_init__(self):
        Filling.__post_init__(self)
        if not self.shape.shifted:
            raise ShapeError("MarkedTableau needs a shifted shape", str(self.shape.outer))
        grid = self.grid()
        for (r, c), value in grid.items():
            if not isinstance(value, MarkedSymbol):
                raise ShapeError("Entries must be marked symbols", f"{(r, c)}={value!r}")
            left = grid.get((r, c - 1))
            if left is not None and not _row_ok(left, value):
                raise ShapeError("Row condition violated", f"row {r}")
            above = grid.get((r - 1, c))
            if above is not None and not _column_ok(above, value):
                raise ShapeError("Column condition violated", f"column {c}")

    def content(self) -> Tuple[int, ...]:
        """counts[i-1] = entries equal to i or i'."""
        values = [s.value for s in self.word()]
        if not values:
            return ()
        counts = [0] * max(values)
        for value in values:
            counts[value - 1] += 1
        return tuple(counts)


def _row_ok(left: MarkedSymbol, right: MarkedSymbol) -> bool:
    return left < right or (left == right and not right.marked)


def _column_ok(above: MarkedSymbol, below: MarkedSymbol) -> bool:
    return above < below or (above == below and below.marked)


def diagonal(n: int) -> frozenset:
    """The main diagonal of the shifted staircase ρ_n."""
    return frozenset((i, i) for i in range(1, n + 1))


# =============================================================================
# LRS words
# =============================================================================

def hat_word(word: MarkedWord) -> MarkedWord:
    """Reverse, then i' -> i and i -> (i+1)'."""
    return tuple(
        MarkedSymbol(s.value) if s.marked else MarkedSymbol(s.value + 1, True)
        for s in reversed(word)
    )


def is_lrs_word(word: MarkedWord) -> bool:
    """Lattice condition on w + hat(w) and the last-i' condition on w.

    (i)  every symbol of value i >= 2 in w + hat(w) is preceded by more
         unmarked i-1 than unmarked i
    (ii) the last i' of w is followed later in w by an unmarked i
    """
    unmarked: Dict[int, int] = {}
    for s in word + hat_word(word):
        if s.value > 1 and unmarked.get(s.value - 1, 0) <= unmarked.get(s.value, 0):
            return False
        if not s.marked:
            unmarked[s.value] = unmarked.get(s.value, 0) + 1

    seen = set()
    for s in reversed(word):
        if not s.marked:
            seen.add(s.value)
        elif s.value not in seen:
            return False
    return True


def is_lrs_tableau(tableau: MarkedTableau) -> bool:
    return is_lrs_word(tableau.word())


def unmarked_counts(word: MarkedWord) -> Dict[int, int]:
    """N_i: occurrences of unmarked i."""
    counts: Dict[int, int] = {}
    for s in word:
        if not s.marked:
            counts[s.value] = counts.get(s.value, 0) + 1
    return counts


# =============================================================================
# Enumeration
# =============================================================================

def _fill_lrs(shape: SkewShape, content: Tuple[int, ...]) -> Iterator[Dict[Cell, MarkedSymbol]]:
    order = shape.reading_order()
    if weight(content) != len(order):
        return
    alphabet = _symbols(len(content))
    counts = [0] * (len(content) + 2)
    unmarked = [0] * (len(content) + 2)
    grid: Dict[Cell, MarkedSymbol] = {}

    def place(index: int) -> Iterator[Dict[Cell, MarkedSymbol]]:
        if index == len(order):
            if is_lrs_word(tuple(grid[cell] for cell in order)):
                yield dict(grid)
            return
        r, c = order[index]
        above = grid.get((r - 1, c))
        right = grid.get((r, c + 1))
        for s in alphabet:
            if right is not None and not _row_ok(s, right):
                if s > right:
                    break
                continue
            if above is not None and not _column_ok(above, s):
                continue
            v = s.value
            if counts[v] >= content[v - 1]:
                continue
            # prefix of the lattice condition, read inside w only
            if v > 1 and unmarked[v - 1] <= unmarked[v]:
                continue
            counts[v] += 1
            if not s.marked:
                unmarked[v] += 1
            grid[(r, c)] = s
            yield from place(index + 1)
            del grid[(r, c)]
            if not s.marked:
                unmarked[v] -= 1
            counts[v] -= 1

    yield from place(0)


def enumerate_lrs(shape: SkewShape, content: Tuple[int, ...]) -> List[MarkedTableau]:
    """All LRS tableaux of a shifted shape with the given content (i and i' counted together)."""
    return [MarkedTableau.from_grid(shape, grid) for grid in _fill_lrs(shape, tuple(content))]


def count_lrs(shape: SkewShape, content: Tuple[int, ...]) -> int:
    return sum(1 for _ in _fill_lrs(shape, tuple(content)))


def lrs_coefficient(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    n: int,
    convention: Convention = "paper",
) -> int:
    """f(λ, μ; ν) for OG(n, 2n+1).

    paper:    LRS tableaux of shape S(λ∨/μ) with content ν∨ (0 if μ ⊄ λ∨)
    standard: LRS tableaux of shape S(ν/λ) with content μ

    Raises:
        ShapeError: for non-strict indices or indices outside ρ_n
    """
    space = AmbientSpace.type_b(n)
    space.require(lam, "lambda")
    space.require(mu, "mu")
    space.require(nu, "nu")

    if convention == "paper":
        lam_dual = staircase_complement(lam, n)
        if not contains(lam_dual, mu):
            return 0
        return count_lrs(SkewShape(lam_dual, mu, shifted=True), staircase_complement(nu, n))
    if not contains(nu, lam) or weight(lam) + weight(mu) != weight(nu):
        return 0
    return count_lrs(SkewShape(nu, lam, shifted=True), mu)


# =============================================================================
# Shifted slides
# =============================================================================

def _moves_up(below: MarkedSymbol, right: MarkedSymbol) -> bool:
    # equal marked symbols go sideways: two i' may share a column, not a row
    return below < right or (below == right and not below.marked)


def _moves_down(above: MarkedSymbol, left: MarkedSymbol) -> bool:
    return above > left or (above == left and not above.marked)


def _strip(values: List[int]) -> Partition:
    return make_partition(values)


def shifted_slide(tableau: MarkedTableau, hole: Cell) -> SlideTrace:
    """Forward shifted slide from an inner corner.

    On the diagonal, a hole with i' to its right and i diagonally below-right
    takes the special slide: both cells become i and the hole jumps to the
    diagonal cell below. Elsewhere the below entry a moves up when a < b, or
    a == b unmarked, or there is no right entry b; otherwise b moves left.

    Raises:
        SlideError: if hole is not an inner corner of a shifted shape
    """
    shape = tableau.shape
    if not shape.shifted:
        raise SlideError(hole, "shape is not shifted")
    if hole not in shape.inner_corners():
        raise SlideError(hole, "not an inner corner")

    grid = tableau.grid()
    r, c = hole
    path, moves = [hole], []
    while True:
        if r == c:
            right = grid.get((r, r + 1))
            diag = grid.get((r + 1, r + 1))
            if (right is not None and diag is not None and right.marked
                    and not diag.marked and right.value == diag.value):
                grid[(r, r)] = MarkedSymbol(right.value)
                grid[(r, r + 1)] = grid.pop((r + 1, r + 1))
                r, c = r + 1, c + 1
                moves.append("special")
                path.append((r, c))
                continue
        below = grid.get((r + 1, c))
        right = grid.get((r, c + 1))
        if below is None and right is None:
            break
        if right is None or (below is not None and _moves_up(below, right)):
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
    new_shape = SkewShape(_strip(outer), shape.without_inner(hole).inner, shifted=True)
    return SlideTrace(hole, tuple(path), MarkedTableau.from_grid(new_shape, grid), tuple(moves))


def reverse_shifted_slide(tableau: MarkedTableau, hole: Cell) -> SlideTrace:
    """Reverse shifted slide from an outer corner; exact inverse of shifted_slide.

    A diagonal hole below a row starting with i i takes the reverse special
    slide (i' to the right of the hole's new position, i into the old one).

    Raises:
        SlideError: if hole is not an outer corner of a shifted shape
    """
    shape = tableau.shape
    if not shape.shifted:
        raise SlideError(hole, "shape is not shifted")
    if hole not in shape.outer_corners():
        raise SlideError(hole, "not an outer corner")

    grid = tableau.grid()
    r, c = hole
    path, moves = [hole], []
    while True:
        if r == c and r >= 2:
            above = grid.get((r - 1, r))
            diag = grid.get((r - 1, r - 1))
            if (above is not None and diag is not None and not above.marked
                    and not diag.marked and above.value == diag.value):
                grid[(r, r)] = MarkedSymbol(above.value)
                grid[(r - 1, r)] = MarkedSymbol(above.value, True)
                del grid[(r - 1, r - 1)]
                r, c = r - 1, c - 1
                moves.append("special")
                path.append((r, c))
                continue
        above = grid.get((r - 1, c))
        left = grid.get((r, c - 1))
        if above is None and left is None:
            break
        if left is None or (above is not None and _moves_down(above, left)):
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
    new_shape = SkewShape(grown.outer, _strip(inner), shifted=True)
    return SlideTrace(hole, tuple(path), MarkedTableau.from_grid(new_shape, grid), tuple(moves))


# =============================================================================
# Hole strips
# =============================================================================

Holes = Tuple[Tuple[Cell, bool], ...]


@dataclass(frozen=True, slots=True)
class HoleStrip:
    """A strip of holes: partition is μ̃ for NW strips S(μ̃/μ), λ̃ for SE strips S(λ∨/λ̃∨)."""
    partition: Partition
    holes: Holes


@dataclass(frozen=True, slots=True)
class HoledTableau:
    """An LRS tableau with a marked/unmarked hole strip on its NW or SE border."""
    base: MarkedTableau
    holes: Holes
    side: HoleSide
    n: int

    def hole_word(self) -> MarkedWord:
        return _hole_word(self.holes)

    def marked_holes(self) -> List[Cell]:
        return [cell for cell, marked in self.holes if marked]


def _hole_word(holes: Holes) -> MarkedWord:
    ordered = sorted(holes, key=lambda item: (item[0][0], -item[0][1]))
    return tuple(MarkedSymbol(1, marked) for _, marked in ordered)


def is_valid_hole_marking(holes: Holes) -> bool:
    """Holes read as 1'/1 must form a shifted tableau with an LRS word."""
    grid = {cell: MarkedSymbol(1, marked) for cell, marked in holes}
    for (r, c), s in grid.items():
        left = grid.get((r, c - 1))
        if left is not None and not _row_ok(left, s):
            return False
        above = grid.get((r - 1, c))
        if above is not None and not _column_ok(above, s):
            return False
    return is_lrs_word(_hole_word(holes))


def _strip_cells(mu: Partition, mu_tilde: Partition, n: int, side: HoleSide) -> List[Cell]:
    if side == "NW":
        return sorted(shifted_cells(mu_tilde, mu))
    return sorted(shifted_cells(staircase_complement(mu, n), staircase_complement(mu_tilde, n)))


def enumerate_hole_strips(mu: Partition, p: int, n: int, side: HoleSide) -> List[HoleStrip]:
    """All validly marked strips for μ → μ̃ (p cells) inside ρ_n.

    NW strips occupy S(μ̃/μ); SE strips occupy S(μ∨/μ̃∨). For each μ̃ there
    are exactly 2^N(μ̃/μ) markings.
    """
    found = []
    for mu_tilde in horizontal_strip_successors(mu, p, AmbientSpace.type_b(n)):
        cells = _strip_cells(mu, mu_tilde, n, side)
        for marks in itertools.product((False, True), repeat=len(cells)):
            holes = tuple(zip(cells, marks))
            if is_valid_hole_marking(holes):
                found.append(HoleStrip(mu_tilde, holes))
    return found


def nw_holed_tableaux(lam: Partition, mu: Partition, nu: Partition, p: int, n: int) -> List[HoledTableau]:
    """NW-holed LRS tableaux on S(λ∨/μ) with content ν∨ and p holes."""
    lam_dual = staircase_complement(lam, n)
    content = staircase_complement(nu, n)
    found = []
    for strip in enumerate_hole_strips(mu, p, n, "NW"):
        if not contains(lam_dual, strip.partition):
            continue
        shape = SkewShape(lam_dual, strip.partition, shifted=True)
        found.extend(HoledTableau(base, strip.holes, "NW", n) for base in enumerate_lrs(shape, content))
    return found


def se_holed_tableaux(lam: Partition, mu: Partition, nu: Partition, p: int, n: int) -> List[HoledTableau]:
    """SE-holed LRS tableaux on S(λ∨/μ) with content ν∨ and p holes."""
    content = staircase_complement(nu, n)
    found = []
    for strip in enumerate_hole_strips(lam, p, n, "SE"):
        lam_tilde_dual = staircase_complement(strip.partition, n)
        if not contains(lam_tilde_dual, mu):
            continue
        shape = SkewShape(lam_tilde_dual, mu, shifted=True)
        found.extend(HoledTableau(base, strip.holes, "SE", n) for base in enumerate_lrs(shape, content))
    return found


# =============================================================================
# Transfers
# =============================================================================

@dataclass(frozen=True, slots=True)
class HoleTransfer:
    holed: HoledTableau
    traces: Tuple[SlideTrace, ...]


def _rows_after_removing(parts: Partition, cells: List[Cell]) -> Partition:
    values = list(parts)
    for r, _ in cells:
        values[r - 1] -= 1
    return make_partition(values)


def _rows_after_adding(parts: Partition, cells: List[Cell]) -> Partition:
    rows = max([len(parts)] + [r for r, _ in cells])
    values = list(parts) + [0] * (rows - len(parts))
    for r, _ in cells:
        values[r - 1] += 1
    return make_partition(values)


def _check_holed(holed: HoledTableau, side: HoleSide) -> None:
    if holed.side != side:
        raise TransferError(f"Expected a {side}-holed tableau, got {holed.side}")
    if not is_lrs_tableau(holed.base):
        raise TransferError("Base tableau is not LRS")
    if not is_valid_hole_marking(holed.holes):
        raise TransferError("Hole marking is not a valid strip marking")


def trace_nw_to_se(holed: HoledTableau) -> HoleTransfer:
    """Slide NW holes to the SE border, recording every path.

    Unmarked holes go first, right to left, then marked holes bottom to top.
    An unmarked hole ending in a row above the previous hole's end becomes marked.

    Raises:
        TransferError: if the input is not a valid NW-holed LRS tableau
    """
    _check_holed(holed, "NW")
    mu_tilde = holed.base.shape.inner
    cells = [cell for cell, _ in holed.holes]
    try:
        mu = _rows_after_removing(mu_tilde, cells)
    except (ShapeError, IndexError) as e:
        raise TransferError("Holes do not form a strip on the NW border") from e
    if (not is_strict(mu) or not is_horizontal_strip(mu_tilde, mu)
            or sorted(cells) != sorted(shifted_cells(mu_tilde, mu))):
        raise TransferError("Holes do not form a strip on the NW border")

    unmarked = sorted((h for h in holed.holes if not h[1]), key=lambda h: (-h[0][1], h[0][0]))
    marked = sorted((h for h in holed.holes if h[1]), key=lambda h: (-h[0][0], -h[0][1]))

    current = holed.base
    traces = []
    finals = []
    previous_row: Optional[int] = None
    for cell, is_marked in unmarked + marked:
        trace = shifted_slide(current, cell)
        end_row = trace.end[0]
        if not is_marked and previous_row is not None and end_row < previous_row:
            is_marked = True
        finals.append((trace.end, is_marked))
        previous_row = end_row
        traces.append(trace)
        current = trace.result

    result = HoledTableau(current, tuple(sorted(finals)), "SE", holed.n)
    return HoleTransfer(result, tuple(traces))


def transfer_nw_to_se(holed: HoledTableau) -> HoledTableau:
    return trace_nw_to_se(holed).holed


def trace_se_to_nw(holed: HoledTableau) -> HoleTransfer:
    """Slide SE holes back to the NW border, recording every path.

    Marked holes go first, top to bottom, then unmarked holes left to right.
    A marked hole whose path meets the diagonal loses its mark.

    Raises:
        TransferError: if the input is not a valid SE-holed LRS tableau
    """
    _check_holed(holed, "SE")
    lam_tilde_dual = holed.base.shape.outer
    cells = [cell for cell, _ in holed.holes]
    try:
        lam_dual = _rows_after_adding(lam_tilde_dual, cells)
    except ShapeError as e:
        raise TransferError("Holes do not form a strip on the SE border") from e
    if not is_strict(lam_dual) or sorted(cells) != sorted(shifted_cells(lam_dual, lam_tilde_dual)):
        raise TransferError("Holes do not form a strip on the SE border")

    marked = sorted((h for h in holed.holes if h[1]), key=lambda h: (h[0][0], h[0][1]))
    unmarked = sorted((h for h in holed.holes if not h[1]), key=lambda h: (h[0][1], -h[0][0]))

    current = holed.base
    traces = []
    finals = []
    for cell, is_marked in marked + unmarked:
        trace = reverse_shifted_slide(current, cell)
        if is_marked and any(r == c for r, c in trace.path):
            is_marked = False
        finals.append((trace.end, is_marked))
        traces.append(trace)
        current = trace.result

    result = HoledTableau(current, tuple(sorted(finals)), "NW", holed.n)
    return HoleTransfer(result, tuple(traces))


def transfer_se_to_nw(holed: HoledTableau) -> HoledTableau:
    return trace_se_to_nw(holed).holed


# =============================================================================
# Path geometry
# =============================================================================

def _west_of(cell: Cell, path: Tuple[Cell, ...]) -> bool:
    """Some box of path is strictly east and weakly north of cell."""
    return any(pc > cell[1] and pr <= cell[0] for pr, pc in path)


def _north_of(cell: Cell, path: Tuple[Cell, ...]) -> bool:
    """Some box of path is strictly south and weakly west of cell."""
    return any(pr > cell[0] and pc <= cell[1] for pr, pc in path)


def path_persistence_violations(
    previous: Tuple[Cell, ...], path: Tuple[Cell, ...]
) -> List[Tuple[str, Cell, Cell]]:
    """Steps of path that leave the west (off the diagonal) or north side of previous."""
    found = []
    for here, there in zip(path, path[1:]):
        if here[0] != here[1] and _west_of(here, previous) and not _west_of(there, previous):
            found.append(("west", here, there))
        if _north_of(here, previous) and not _north_of(there, previous):
            found.append(("north", here, there))
    return found
