from src.birmap.builtins import (
    builtin,
    inverse,
    parse_map,
    parse_word,
    phi,
    phi_word,
    two_singularity_map,
    word,
    xi_word,
)
from src.birmap.maps import (
    MapWord,
    RatMap,
    compose_raw,
    compose_reduce,
    inverse_linear,
    is_identity_proj,
    make_linear,
    pullback_raw,
    verify_word,
)
from src.birmap.reduction import Reduction, strip_common_factor

__all__ = [
    "MapWord",
    "RatMap",
    "Reduction",
    "builtin",
    "compose_raw",
    "compose_reduce",
    "inverse",
    "inverse_linear",
    "is_identity_proj",
    "make_linear",
    "parse_map",
    "parse_word",
    "phi",
    "phi_word",
    "pullback_raw",
    "strip_common_factor",
    "two_singularity_map",
    "verify_word",
    "xi_word",
]
