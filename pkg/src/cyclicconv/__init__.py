"""Sliding-window decoding of doubly cyclic convolutional codes."""

from .convcode import (BruteForcePartialDecoder, ConvEncoder, DecodeReport, WindowContext,
                       check_basic_reduced, distance_checks, encode, sliding_decode,
                       weight_param_search, window_matrices)
from .dcc import DoublyCyclicCode, StackedCode, dcc_build, stack_membership
from .gf import FieldTable, field_build, field_from_order, primitive_validate
from .rsdec import nearest_codeword_search, recover_message, rs_bounded_decode
from .windec import DecoderConfig, decode_stream, extend_partial, fallback_select, partial_block_decode

__version__ = "0.1.0"
