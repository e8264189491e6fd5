from typing import Any

import attrs
from attrs import define

MAX_MODULUS = 2**31
"""The largest prime modulus accepted for coefficient rings. Larger values are rejected before any primality test."""


def is_prime_number(value: int) -> bool:
    """Tests primality by trial division.

    Args:
        value (int): The candidate. Moduli used with schemes are small, so trial division is adequate.

    Returns:
        bool: `True` if `value` is a prime number.
    """
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


def is_prime_modulus(value: int) -> bool:
    """Whether `value` is a prime no larger than `MAX_MODULUS`."""
    return value <= MAX_MODULUS and is_prime_number(value)


@define(repr=False, frozen=True, slots=True)
class _PrimeValidator:
    def __call__(self, inst: Any, attr: attrs.Attribute, value: Any) -> None:  # noqa: ANN401
        """We use a callable class to be able to change the ``__repr__``."""
        if isinstance(value, bool) or not isinstance(value, int):
            msg = f"Value of '{attr.name}' must be an integer"
            raise ValueError(msg)
        if not is_prime_modulus(value):
            msg = f"'{attr.name}' must be a prime number no larger than {MAX_MODULUS}: {value}"
            raise ValueError(msg)

    def __repr__(self) -> str:
        return "<prime validator>"


def is_prime() -> _PrimeValidator:
    """A validator that raises `ValueError` unless the initializer value is a prime no larger than `MAX_MODULUS`."""
    return _PrimeValidator()


@define(repr=False, frozen=True, slots=True)
class _PositiveTripleValidator:
    def __call__(self, inst: Any, attr: attrs.Attribute, value: Any) -> None:  # noqa: ANN401
        if len(value) != 3 or any(not isinstance(x, int) or x < 1 for x in value):
            msg = f"'{attr.name}' must be a triple of positive integers: {value}"
            raise ValueError(msg)

    def __repr__(self) -> str:
        return "<positive triple validator>"


def is_format() -> _PositiveTripleValidator:
    """A validator that raises `ValueError` unless the value is a matrix format `(n, m, p)` of positive integers."""
    return _PositiveTripleValidator()
