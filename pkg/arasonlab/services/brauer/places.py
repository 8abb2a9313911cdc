"""Places of Q: the real place and one finite place per prime."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Union

from arasonlab.services.arith import is_prime


@dataclass(frozen=True)
class Place:
    """``prime is None`` stands for the real place."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"Finite place needs a prime, got {self.prime}")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)

    def to_json(self) -> Union[str, int]:
        return "real" if self.prime is None else self.prime

    @classmethod
    def from_json(cls, value) -> "Place":
        if isinstance(value, str) and value.strip().lower() in ("real", "inf", "infinity"):
            return REAL
        return finite(int(value))

    def __repr__(self) -> str:
        return "Real" if self.prime is None else f"Finite({self.prime})"


REAL = Place(None)


def finite(p: int) -> Place:
    return Place(int(p))


def sort_places(places: Iterable[Place]) -> List[Place]:
    return sorted(places, key=Place.sort_key)
