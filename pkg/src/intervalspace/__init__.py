"""Exact-arithmetic model of labelled interval spaces, their scanning map into
loop spaces and the homotopies around it."""
from .errors import *  # noqa: F401,F403
from .pam import (BASE, Pam, PointedSetPam, SignPam, SmashPam, pam_sum, pam_sum_many,
                  smash)
from .config import (PointConfig, config_sum, filtration_index, interchange_eval,
                     map_labels, normalize_config)
from .intervals import (MINUS, PLUS, Interval, IntervalClass, IntervalPam, IntervalSeq,
                        MirrorClass, MirrorPam, Window, class_sum, eps_separated, in_a,
                        involute, m_items, mirror_embed, mirror_expand, mirror_sum,
                        mirror_translate, paste, reduce, translate, validate_sequence)
from .tilde import TildeElem, embed, label_pam, tilde_sum
from .scanning import *  # noqa: F401,F403
from .homotopy import *  # noqa: F401,F403
from .generators import GenSpec, gen_random
from .oracle import oracle_reduce_bfs, representatives
from .textio import format_element, parse
from .render import render
from .suites import SUITES, PropertyResult, SuiteReport, run_property_suite

__version__ = "0.1.0"
