"""
Product of two identical length-q nonsystematic RS codes
곱 부호 파라미터 비교
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import InvalidComponent


@dataclass(frozen=True)
class ProductCodeParams:
    q: int
    d_component: int
    k_component: int
    N: int
    K: int
    check_symbols: int
    d_min: int

    @property
    def identity_checks(self) -> int:
        """(d-1)(2n-d+1) with n = q, d = component distance"""
        d, n = self.d_component, self.q
        return (d - 1) * (2 * n - d + 1)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "d_component": self.d_component,
            "k_component": self.k_component,
            "N": self.N,
            "K": self.K,
            "checkSymbols": self.check_symbols,
            "d_min": self.d_min,
        }


def product_code_checks(q: int, d_component: int) -> ProductCodeParams:
    if not 1 <= d_component <= q:
        raise InvalidComponent(f"component distance {d_component} must lie in [1, q={q}]")
    k = q - d_component + 1
    params = ProductCodeParams(
        q=q,
        d_component=d_component,
        k_component=k,
        N=q * q,
        K=k * k,
        check_symbols=q * q - k * k,
        d_min=d_component * d_component,
    )
    if params.check_symbols != params.identity_checks:
        raise ArithmeticError(f"check-symbol identity failed for q={q}, d={d_component}")
    return params


def _exact_sqrt(value: Fraction) -> Union[Fraction, None]:
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def product_rate_relation(q: int, d_over_N: Union[Fraction, float]) -> Union[Fraction, float]:
    """1 - K/N = (sqrt(d/N) - 1/q)(2 - sqrt(d/N) + 1/q); exact when d/N is a rational square"""
    if not 0 < d_over_N <= 1:
        raise ValueError(f"d/N must lie in (0, 1], got {d_over_N}")
    if isinstance(d_over_N, Fraction):
        root = _exact_sqrt(d_over_N)
        if root is not None:
            inv_q = Fraction(1, q)
            return (root - inv_q) * (2 - root + inv_q)
    root = math.sqrt(float(d_over_N))
    return (root - 1 / q) * (2 - root + 1 / q)
