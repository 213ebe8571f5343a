"""Maximum nonattacking pawn arrangements on even-sided boards."""

from .board import (Board, BoardError, Cell, CellOutOfRangeError, DuplicateCellError,
                    MalformedBoardError, attacks, from_json, is_independent, load_board,
                    parse_ascii, render_ascii, to_json, violations)
from .strips import (A, B, C, D, DecompositionError, NotInMatrix, SquareType, Strip,
                     StripError, StripMatrix, build_strip_matrix, can_follow,
                     can_stack_strips, enumerate_strips, f, first_row_strip, locate_strip,
                     strip_entry, strip_to_board)
from .bijection import (IndexSeq, InvalidIndexSeq, InvalidSubsetPair, InvariantViolation,
                        NotMaximumIndependent, OddDimensions, RankOutOfRange, SubsetPair,
                        arrangement_count, index_seq_to_subsets, phi, phi_inverse, rank,
                        subsets_to_index_seq, unrank)
from .oracle import (CountResult, OracleError, count_max_arrangements, count_via_strip_chains,
                     enumerate_max_arrangements, max_pawn_count)

__version__ = "0.1.0"
