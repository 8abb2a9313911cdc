"""Seeded generators for forms, involutions and matched pairs.

Instances are kept as plain integers (signed squarefree representatives) so
that they serialize as JSON and can be minimized entry by entry.
"""
import random
from functools import lru_cache
from typing import Callable, Iterator, List, Sequence, Tuple

from arasonlab.services.arith import sc_prod, square_class, squarefree_part
from arasonlab.services.brauer import is_norm, quat_class
from arasonlab.services.hermitian import HermContext, HermForm
from arasonlab.services.unitary import UnitaryInv
from .models import GenConfig

Entries = List[int]


@lru_cache(maxsize=64)
def squarefree_pool(height: int) -> Tuple[int, ...]:
    """Signed squarefree integers 0 < |x| <= height."""
    positive = [x for x in range(1, height + 1) if squarefree_part(x) == x]
    return tuple(s * x for x in positive for s in (1, -1))


def class_int(*values: int) -> int:
    """Squarefree representative of the square class of the product of ``values``."""
    return sc_prod(square_class(v) for v in values).to_int()


def prod_class(entries: Sequence[int]) -> int:
    return class_int(*entries) if entries else 1


def signed_disc(entries: Sequence[int]) -> int:
    """(-1)^(n(n-1)/2) times the product, as a squarefree integer."""
    n = len(entries)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * prod_class(entries)


def disc_algebras_match(delta: int, e0: Sequence[int], e1: Sequence[int]) -> bool:
    return quat_class(delta, signed_disc(e0)) == quat_class(delta, signed_disc(e1))


class InstanceGenerator:
    """Draws integer data for one trial from a private ``random.Random``."""

    def __init__(self, cfg: GenConfig, stream: str):
        self.cfg = cfg
        self.rng = random.Random(f"{cfg.seed}:{stream}")
        self.pool = squarefree_pool(cfg.height_bound)

    # -- scalars ----------------------------------------------------------
    def entry(self) -> int:
        return self.rng.choice(self.pool)

    def entries(self, k: int) -> Entries:
        return [self.entry() for _ in range(k)]

    def delta(self) -> int:
        return self.rng.choice(self.cfg.delta_pool)

    def choice(self, values: Sequence):
        return self.rng.choice(values)

    def randint(self, lo: int, hi: int) -> int:
        return self.rng.randint(lo, hi)

    def nonzero_int(self, bound: int) -> int:
        value = self.rng.randint(1, bound)
        return value if self.rng.random() < 0.5 else -value

    def norm(self, delta: int) -> int:
        """Squarefree class of x^2 - delta y^2 for small x, y not both zero."""
        while True:
            x, y = self.rng.randint(-3, 3), self.rng.randint(0, 3)
            value = x * x - delta * y * y
            if value:
                return class_int(value)

    # -- hermitian diagonals ----------------------------------------------
    def split_disc_entries(self, delta: int, n: int) -> Entries:
        """Random diagonal with (delta, d(h)) split.

        Half of the time the last entry is solved for d(h) = 1; otherwise
        rejection sampling, falling back to the solved form.
        """
        if self.rng.random() < 0.5:
            for _ in range(20):
                entries = self.entries(n)
                if is_norm(signed_disc(entries), delta):
                    return entries
        head = self.entries(n - 1)
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return head + [class_int(sign, prod_class(head))]

    def hyperbolic_entries(self, n: int) -> Entries:
        pairs = self.entries(n // 2)
        out = [e for a in pairs for e in (a, -a)]
        self.rng.shuffle(out)
        return out

    # -- matched edits ----------------------------------------------------
    def _edit_identity(self, delta: int, e: Entries) -> Entries:
        return list(e)

    def _edit_norm_rescale(self, delta: int, e: Entries) -> Entries:
        out = list(e)
        i = self.rng.randrange(len(out))
        out[i] = class_int(out[i], self.norm(delta))
        return out

    def _edit_permute(self, delta: int, e: Entries) -> Entries:
        out = list(e)
        self.rng.shuffle(out)
        return out

    def _edit_sign_flip(self, delta: int, e: Entries) -> Entries:
        out = list(e)
        if len(out) < 2:
            return out
        i, j = self.rng.sample(range(len(out)), 2)
        out[i], out[j] = -out[i], -out[j]
        return out

    def _edit_pair_replace(self, delta: int, e: Entries) -> Entries:
        out = list(e)
        if len(out) < 2:
            return out
        i, j = self.rng.sample(range(len(out)), 2)
        c = self.entry()
        out[i], out[j] = class_int(out[i], c), class_int(out[j], c)
        return out

    def _edit_scalar(self, delta: int, e: Entries) -> Entries:
        lam = self.entry()
        return [class_int(a, lam) for a in e]

    def _edit_fresh(self, delta: int, e: Entries) -> Entries:
        head = self.entries(len(e) - 1)
        return head + [class_int(prod_class(e), prod_class(head))]

    def _edit_rejection(self, delta: int, e: Entries) -> Entries:
        for _ in range(30):
            candidate = self.entries(len(e))
            if disc_algebras_match(delta, e, candidate):
                return candidate
        return list(e)

    def isometric_edit(self, delta: int, e: Entries) -> Entries:
        """A diagonal of a hermitian form similar to the one of ``e``."""
        edits = [self._edit_norm_rescale, self._edit_permute, self._edit_scalar]
        out = list(e)
        for _ in range(self.rng.randint(1, 3)):
            out = self.rng.choice(edits)(delta, out)
        return out

    def matched_edit(self, delta: int, e: Entries) -> Entries:
        """A diagonal with the same discriminant algebra as ``e``.

        One or two edits are composed; the fresh and rejection edits are
        weighted up so that non-isomorphic pairs are common.
        """
        edits: List[Callable[[int, Entries], Entries]] = [
            self._edit_identity,
            self._edit_norm_rescale,
            self._edit_permute,
            self._edit_sign_flip,
            self._edit_pair_replace,
            self._edit_scalar,
            self._edit_fresh,
            self._edit_fresh,
            self._edit_rejection,
        ]
        out = list(e)
        for _ in range(self.rng.randint(1, 2)):
            out = self.rng.choice(edits)(delta, out)
        return out

    def matched_pair_entries(self, delta: int, n: int, split: bool = False) -> Tuple[Entries, Entries]:
        e0 = self.split_disc_entries(delta, n) if split else self.entries(n)
        return e0, self.matched_edit(delta, e0)

    # -- typed draws ------------------------------------------------------
    def herm(self, ctx: HermContext, rank: int) -> HermForm:
        return HermForm(ctx, tuple(self.entries(rank)))

    def matched_pair(self, ctx: HermContext, n: int, split: bool = False) -> Tuple[UnitaryInv, UnitaryInv]:
        """Two degree-n involutions over ``ctx`` with equal discriminant algebras."""
        e0, e1 = self.matched_pair_entries(ctx.to_json(), n, split=split)
        return UnitaryInv(ctx, n, HermForm(ctx, tuple(e0))), UnitaryInv(ctx, n, HermForm(ctx, tuple(e1)))


def _stream(cfg: GenConfig, label: str) -> Iterator[InstanceGenerator]:
    for i in range(cfg.trials):
        yield InstanceGenerator(cfg, f"{label}:{i}")


def gen_herm(cfg: GenConfig, ctx: HermContext, rank: int) -> Iterator[HermForm]:
    """cfg.trials hermitian forms of the given rank over ``ctx``."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    for gen in _stream(cfg, f"herm:{ctx.to_json()}:{rank}"):
        yield gen.herm(ctx, rank)


def gen_matched_pair(cfg: GenConfig, ctx: HermContext, n: int) -> Iterator[Tuple[UnitaryInv, UnitaryInv]]:
    """cfg.trials pairs of degree-n involutions with equal discriminant algebras (n even)."""
    if n < 2:
        raise ValueError("degree must be >= 2")
    for gen in _stream(cfg, f"pair:{ctx.to_json()}:{n}"):
        yield gen.matched_pair(ctx, n)
