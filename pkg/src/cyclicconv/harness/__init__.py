from .baseline import BlockResult, baseline_blockwise_rs
from .channel import ErrorModel, error_pattern, inject, make_rng, window_weights
from .simulate import SimulationResult, Trial, run_trial, simulate
from .streamfile import (StreamFile, StreamFormatError, parse_stream, read_stream,
                         serialize_stream, write_stream)
