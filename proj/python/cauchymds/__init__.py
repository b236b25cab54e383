"""Cauchy MDS array codes over F2[x]/(1+x^p), backed by a C++ core."""

from ._cauchymds import (
    CodeParams,
    ComplexityRow,
    RingElement,
    ShardDataError,
    XorCounter,
    circulant_decode_normalized,
    circulant_encode_normalized,
    constants,
    decode,
    decode_counted,
    decode_shards,
    div_binomial,
    div_binomial_counted,
    encode,
    encode_counted,
    encode_shards,
    lu_solve,
    lu_solve_counted,
    mds_check,
    mul_binomial,
    mul_monomial,
    normalized_curves,
    predict_decode_xors,
    predict_encode_xors,
    predict_solve_xors,
    primes_in_range,
)

__all__ = [
    "CodeParams",
    "ComplexityRow",
    "RingElement",
    "ShardDataError",
    "XorCounter",
    "circulant_decode_normalized",
    "circulant_encode_normalized",
    "constants",
    "decode",
    "decode_counted",
    "decode_shards",
    "div_binomial",
    "div_binomial_counted",
    "encode",
    "encode_counted",
    "encode_shards",
    "lu_solve",
    "lu_solve_counted",
    "mds_check",
    "mul_binomial",
    "mul_monomial",
    "normalized_curves",
    "predict_decode_xors",
    "predict_encode_xors",
    "predict_solve_xors",
    "primes_in_range",
]
