from .blocks import Block as Block
from .blocks import BlockSequence as BlockSequence
from .blocks import block_sequence as block_sequence
from .criterion import BlockEuler as BlockEuler
from .criterion import Euler as Euler
from .criterion import GammaSpec as GammaSpec
from .criterion import block_euler as block_euler
from .criterion import check_divisor_free as check_divisor_free
from .criterion import check_sequence as check_sequence
from .criterion import euler_column as euler_column
from .criterion import resolve_gamma as resolve_gamma
from .positive import positive_char_split as positive_char_split
from .search import find_candidate_nu as find_candidate_nu

__all__ = [
    "Euler",
    "BlockEuler",
    "GammaSpec",
    "euler_column",
    "block_euler",
    "resolve_gamma",
    "check_divisor_free",
    "check_sequence",
    "positive_char_split",
    "find_candidate_nu",
    "Block",
    "BlockSequence",
    "block_sequence",
]
