"""The exact coefficient rings that schemes are defined over."""

from enum import StrEnum

from attrs import field, frozen, validators

from utils.validators import is_prime


class RingKind(StrEnum):
    INTEGERS = "Z"
    PRIME_FIELD = "Zp"


def _check_modulus(instance: "RingSpec", _attribute: object, value: int | None) -> None:
    if instance.kind == RingKind.PRIME_FIELD and value is None:
        raise ValueError("A prime field requires a modulus")
    if instance.kind == RingKind.INTEGERS and value is not None:
        raise ValueError("The integers do not take a modulus")


@frozen
class RingSpec:
    """A coefficient ring: either the integers or a prime field Z_p.

    Coefficients are plain Python integers. Over Z_p the canonical representative of a residue lies in [0, p).
    """

    kind: RingKind = field(converter=RingKind)
    modulus: int | None = field(default=None, validator=[validators.optional(is_prime()), _check_modulus])

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls(RingKind.INTEGERS)

    @classmethod
    def prime_field(cls, modulus: int) -> "RingSpec":
        return cls(RingKind.PRIME_FIELD, modulus)

    @classmethod
    def from_text(cls, text: str) -> "RingSpec":
        """Parses `Z`, `Zp:<p>` or `Zp <p>`.

        Raises:
            ValueError: The text does not name a ring, or the modulus is not prime.
        """
        text = text.strip()
        if text == RingKind.INTEGERS.value:
            return cls.integers()
        for separator in (":", " "):
            prefix = f"{RingKind.PRIME_FIELD.value}{separator}"
            if text.startswith(prefix) and text.removeprefix(prefix).isdigit():
                return cls.prime_field(int(text.removeprefix(prefix)))
        raise ValueError(f"Unrecognised ring '{text}': expected 'Z' or 'Zp:<prime>'")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == RingKind.PRIME_FIELD

    def normalize(self, value: int) -> int:
        """Maps an integer to its canonical representative in this ring."""
        if self.modulus is None:
            return int(value)
        return int(value) % self.modulus

    def is_canonical(self, value: int) -> bool:
        return self.modulus is None or 0 <= value < self.modulus

    def __str__(self) -> str:
        if self.modulus is None:
            return self.kind.value
        return f"{self.kind.value} {self.modulus}"
