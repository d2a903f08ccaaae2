"""
Combinatorics package.

Contains the tableau machinery behind the structure constants:
- shapes: partitions, ambient spaces, skew shapes, strips
- lr_tableaux: semistandard tableaux, lattice words, LR counting
- jdt: type A slides and the Pieri transfer
- shifted: marked shifted tableaux, LRS counting, shifted slides, holed transfers
"""

from .shapes import (
    Partition,
    Cell,
    AmbientSpace,
    SkewShape,
    CellSet,
    BorderStripData,
    make_partition,
    make_strict,
    is_strict,
    weight,
    part,
    contains,
    is_horizontal_strip,
    parse_partition,
    format_partition,
    order_key,
    term_key,
    dual_partition,
    staircase_complement,
    young_cells,
    shifted_cells,
    horizontal_strip_successors,
    border_strip_data,
    strip_exponent,
)
from .lr_tableaux import (
    Convention,
    Filling,
    Tableau,
    word_of,
    is_lattice_word,
    is_lr_tableau,
    enumerate_lr,
    count_lr,
    lr_coefficient,
)
from .jdt import (
    SlideTrace,
    PieriTransfer,
    PieriFamily,
    slide,
    reverse_slide,
    strip_cells,
    pieri_transfer,
    pieri_transfer_reverse,
    crossing_violations,
    pieri_families,
)
from .shifted import (
    MarkedSymbol,
    MarkedTableau,
    HoleStrip,
    HoledTableau,
    HoleTransfer,
    diagonal,
    hat_word,
    is_lrs_word,
    is_lrs_tableau,
    unmarked_counts,
    enumerate_lrs,
    count_lrs,
    lrs_coefficient,
    shifted_slide,
    reverse_shifted_slide,
    is_valid_hole_marking,
    enumerate_hole_strips,
    nw_holed_tableaux,
    se_holed_tableaux,
    trace_nw_to_se,
    trace_se_to_nw,
    transfer_nw_to_se,
    transfer_se_to_nw,
    path_persistence_violations,
)


__all__ = [
    # Shapes
    "Partition", "Cell", "AmbientSpace", "SkewShape", "CellSet", "BorderStripData",
    "make_partition", "make_strict", "is_strict", "weight", "part", "contains",
    "is_horizontal_strip", "parse_partition", "format_partition", "order_key", "term_key",
    "dual_partition", "staircase_complement", "young_cells", "shifted_cells",
    "horizontal_strip_successors", "border_strip_data", "strip_exponent",
    # LR tableaux
    "Convention", "Filling", "Tableau", "word_of", "is_lattice_word", "is_lr_tableau",
    "enumerate_lr", "count_lr", "lr_coefficient",
    # Type A slides
    "SlideTrace", "PieriTransfer", "PieriFamily", "slide", "reverse_slide", "strip_cells",
    "pieri_transfer", "pieri_transfer_reverse", "crossing_violations", "pieri_families",
    # Shifted
    "MarkedSymbol", "MarkedTableau", "HoleStrip", "HoledTableau", "HoleTransfer",
    "diagonal", "hat_word", "is_lrs_word", "is_lrs_tableau", "unmarked_counts",
    "enumerate_lrs", "count_lrs", "lrs_coefficient",
    "shifted_slide", "reverse_shifted_slide",
    "is_valid_hole_marking", "enumerate_hole_strips", "nw_holed_tableaux", "se_holed_tableaux",
    "trace_nw_to_se", "trace_se_to_nw", "transfer_nw_to_se", "transfer_se_to_nw",
    "path_persistence_violations",
]
