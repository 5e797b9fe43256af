"""Bruhat order on fixed-point-free involutions: construction, EL-labeling checks and reports."""

from .bruhat import bruhat_leq, bruhat_poset, brute_covers, compare, interval, rank_matrix
from .config import Caps
from .ds import ComparisonReport, build_ds_poset, compare_posets, ds_upper_covers
from .el import ELReport, label_word, shelling_order, verify_el
from .involution import (
    BracketSequence,
    FpfInvolution,
    crossings,
    ds_length,
    enumerate_fpf,
    from_brackets,
    inversions,
    length,
    maximum,
    minimum,
    modified_inversions,
    parse,
    to_brackets,
)
from .poset import GradedPoset, mobius, q_double_factorial, rank_genfun
from .rises import Label, Rise, RiseKind, apply_ct, classify_rises, fpf_poset, rise_covers
from .topology import BallCertificate, ball_certificate, order_complex_facets

__version__ = "0.1.0"
