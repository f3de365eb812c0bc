"""
Code Package
Parameters, encoding, distance verification and erasure decoding
"""

from .encoder import (
    Codeword,
    GeneratorMatrix,
    Message,
    encode,
    encode_batch,
    evaluate_poly,
    generator_matrix,
    point_tuple,
)
from .erasure import (
    ERASED,
    ChannelReport,
    ErasurePattern,
    ReceivedWord,
    decode_erasures,
    erase,
    simulate_erasure_channel,
    simulate_erasure_channel_async,
)
from .manager import CodeManager, get_code_manager
from .params import (
    CodeSpec,
    DegreeRegion,
    RegionLimits,
    build_region,
    check_count,
    check_count_closed_form,
    check_count_small_d,
    guaranteed_distance,
    info_count,
    k_profile,
    limits,
    params_dict,
    rate_lower_bound,
)
from .verifier import (
    DistanceReport,
    min_weight_exhaustive,
    min_weight_exhaustive_async,
    min_weight_of_generator,
    min_weight_sampled,
    scan_min_weight_async,
)
from .wordfile import format_symbols, parse_symbols, read_codeword, read_message, read_received, write_symbols

__all__ = [
    # Parameters
    "CodeSpec",
    "DegreeRegion",
    "RegionLimits",
    "build_region",
    "info_count",
    "check_count",
    "check_count_closed_form",
    "check_count_small_d",
    "k_profile",
    "limits",
    "guaranteed_distance",
    "rate_lower_bound",
    "params_dict",

    # Encoding
    "Message",
    "Codeword",
    "GeneratorMatrix",
    "encode",
    "encode_batch",
    "evaluate_poly",
    "generator_matrix",
    "point_tuple",

    # Cache
    "CodeManager",
    "get_code_manager",

    # Distance
    "DistanceReport",
    "min_weight_exhaustive",
    "min_weight_exhaustive_async",
    "min_weight_of_generator",
    "min_weight_sampled",
    "scan_min_weight_async",

    # Erasures
    "ERASED",
    "ErasurePattern",
    "ReceivedWord",
    "ChannelReport",
    "erase",
    "decode_erasures",
    "simulate_erasure_channel",
    "simulate_erasure_channel_async",

    # Files
    "parse_symbols",
    "format_symbols",
    "read_message",
    "read_codeword",
    "read_received",
    "write_symbols",
]
