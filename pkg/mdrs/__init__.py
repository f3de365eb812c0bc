"""
mdrs
Multi-dimensional nonsystematic Reed-Solomon codes over GF(p^m)
"""

__version__ = "0.1.0"
__description__ = "Multi-dimensional nonsystematic Reed-Solomon codes: parameters, encoding, erasure decoding and rate analysis"
