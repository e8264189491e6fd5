"""Ring adapters: the arithmetic a bilinear program is evaluated with.

Adapters never need multiplication to be commutative. Coefficients act on ring elements as integers (repeated
addition), so an adapter only supplies its own zero, addition, negation and multiplication.
"""

from typing import Any, Protocol, runtime_checkable

import numpy as np

from utils.validators import MAX_MODULUS, is_prime_modulus


@runtime_checkable
class RingAdapter[T](Protocol):
    """The operations `evaluate` needs from the ring that matrix entries live in."""

    def zero(self) -> T: ...

    def add(self, x: T, y: T) -> T: ...

    def negate(self, x: T) -> T: ...

    def multiply(self, x: T, y: T) -> T: ...


@runtime_checkable
class SamplingRing[T](RingAdapter[T], Protocol):
    """A ring adapter that can also draw random elements and compare them, as the equivalence oracle requires."""

    def sample(self, rng: np.random.Generator) -> T: ...

    def equals(self, x: T, y: T) -> bool: ...


class IntegerRing:
    """Python integers. Samples are drawn from [low, high]."""

    def __init__(self, low: int = -9, high: int = 9) -> None:
        self.low = low
        self.high = high

    def zero(self) -> int:
        return 0

    def add(self, x: int, y: int) -> int:
        return x + y

    def negate(self, x: int) -> int:
        return -x

    def multiply(self, x: int, y: int) -> int:
        return x * y

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.low, self.high, endpoint=True))

    def equals(self, x: int, y: int) -> bool:
        return x == y

    def __repr__(self) -> str:
        return "IntegerRing()"


class ModularRing:
    """The prime field Z_p, with elements as integers in [0, p)."""

    def __init__(self, modulus: int) -> None:
        if not is_prime_modulus(modulus):
            raise ValueError(f"Modulus {modulus} is not a prime no larger than {MAX_MODULUS}")
        self.modulus = modulus

    def zero(self) -> int:
        return 0

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def negate(self, x: int) -> int:
        return -x % self.modulus

    def multiply(self, x: int, y: int) -> int:
        return x * y % self.modulus

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.modulus))

    def equals(self, x: int, y: int) -> bool:
        return (x - y) % self.modulus == 0

    def __repr__(self) -> str:
        return f"ModularRing({self.modulus})"


class MatrixRing:
    """Square integer matrices, optionally reduced mod a prime: a noncommutative ring for testing programs.

    Elements are numpy int64 arrays of shape (size, size); samples have entries in [low, high].
    """

    def __init__(self, size: int = 2, modulus: int | None = None, low: int = -9, high: int = 9) -> None:
        if size < 1:
            raise ValueError(f"Matrix size must be positive, got {size}")
        if modulus is not None and not is_prime_modulus(modulus):
            raise ValueError(f"Modulus {modulus} is not a prime no larger than {MAX_MODULUS}")
        self.size = size
        self.modulus = modulus
        self.low = low
        self.high = high

    def _reduce(self, x: np.ndarray[Any, Any]) -> np.ndarray[Any, Any]:
        return x if self.modulus is None else x % self.modulus

    def zero(self) -> np.ndarray[Any, Any]:
        return np.zeros((self.size, self.size), dtype=np.int64)

    def add(self, x: np.ndarray[Any, Any], y: np.ndarray[Any, Any]) -> np.ndarray[Any, Any]:
        return self._reduce(x + y)

    def negate(self, x: np.ndarray[Any, Any]) -> np.ndarray[Any, Any]:
        return self._reduce(-x)

    def multiply(self, x: np.ndarray[Any, Any], y: np.ndarray[Any, Any]) -> np.ndarray[Any, Any]:
        return self._reduce(x @ y)

    def sample(self, rng: np.random.Generator) -> np.ndarray[Any, Any]:
        values = rng.integers(self.low, self.high, size=(self.size, self.size), endpoint=True, dtype=np.int64)
        return self._reduce(values)

    def equals(self, x: np.ndarray[Any, Any], y: np.ndarray[Any, Any]) -> bool:
        return bool(np.array_equal(self._reduce(x), self._reduce(y)))

    def __repr__(self) -> str:
        suffix = "" if self.modulus is None else f", modulus={self.modulus}"
        return f"MatrixRing({self.size}{suffix})"
