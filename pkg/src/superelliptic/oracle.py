"""Faithful word-problem backends for the three base groups.

* ``eq_disk``: the group of the disk with ``2n+1`` marked points, i.e. the
  braid group on ``2n+1`` strands.  Equality is decided through the
  classical (faithful) action on a free group of rank ``2n+1`` where
  ``sigma_i`` maps ``x_i -> x_i x_{i+1} x_i^{-1}``, ``x_{i+1} -> x_i``.
* ``eq_star``: the disk group modulo its center (the full twist); the
  quotient of the disk group obtained by capping the boundary with a
  marked disk.
* ``eq_sphere``: the marked-sphere group.  A word is trivial iff its point
  permutation is trivial and its outer action on the rank ``2n+1`` free
  group (last puncture loop eliminated through the relation
  ``x_1 ... x_{2n+2} = 1``) is an inner automorphism.

The sphere criterion is an adopted computational model, not a quoted
definition; the classical-presentation cross-check in the theorem suite
guards it and its verdict is embedded in every report.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels as K
from .words import Context, Word, exponent_sum, psi

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    raw = os.environ.get("SUPERELLIPTIC_BUDGET_LETTERS", "")
    try:
        return int(raw) if raw else DEFAULT_BUDGET
    except ValueError:
        return DEFAULT_BUDGET


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in a free group of the given rank."""

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"letter {a} out of range for rank {self.rank}")

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, j: int) -> "FreeWord":
        return cls(rank, (j,))

    @classmethod
    def from_letters(cls, rank: int, letters) -> "FreeWord":
        reduced = K.reduce_word(K.as_word_array(list(letters)))
        return cls(rank, tuple(int(a) for a in reduced))

    @cached_property
    def array(self) -> np.ndarray:
        return K.as_word_array(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        merged = K.concat(self.array, other.array)
        return FreeWord(self.rank, tuple(int(a) for a in merged))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-a for a in reversed(self.letters)))

    def conjugated_by(self, w: "FreeWord") -> "FreeWord":
        """``w * self * w^{-1}``."""
        return w * self * w.inverse()

    def cyclic_split(self) -> tuple["FreeWord", "FreeWord"]:
        """Return ``(u, core)`` with ``self = u core u^{-1}``, core cyclically reduced."""
        w = self.letters
        i, j = 0, len(w) - 1
        while i < j and w[i] == -w[j]:
            i += 1
            j -= 1
        return FreeWord(self.rank, w[:i]), FreeWord(self.rank, w[i : j + 1])

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism given by the images of the generators."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError("need one image per generator")

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        return cls(rank, tuple(FreeWord.generator(rank, j) for j in range(1, rank + 1)))

    @property
    def is_identity(self) -> bool:
        return all(im.letters == (j,) for j, im in enumerate(self.images, start=1))

    @cached_property
    def _flat(self) -> tuple[np.ndarray, np.ndarray]:
        offs = np.zeros(self.rank + 1, dtype=np.int64)
        for j, im in enumerate(self.images, start=1):
            offs[j] = offs[j - 1] + len(im)
        flat = np.empty(int(offs[-1]), dtype=np.int64)
        for j, im in enumerate(self.images, start=1):
            flat[int(offs[j - 1]) : int(offs[j])] = im.array
        return flat, offs

    def apply(self, w: FreeWord, budget: int | None = None) -> FreeWord:
        if w.rank != self.rank:
            raise ValueError("rank mismatch")
        flat, offs = self._flat
        out = K.apply_subst(w.array, flat, offs, budget or default_budget())
        return FreeWord(self.rank, tuple(int(a) for a in out))

    def compose(self, other: "FreeAutomorphism", budget: int | None = None) -> "FreeAutomorphism":
        """``self o other`` (apply ``other`` first)."""
        return FreeAutomorphism(
            self.rank, tuple(self.apply(im, budget) for im in other.images)
        )


# -- evaluation of braid words as free-group automorphisms ------------------

_ACTION_CACHE: dict = {}
_ACTION_CACHE_MAX = 4096


def _action_images(letters: tuple[int, ...], m: int, sphere_m: int, budget: int):
    key = (letters, m, sphere_m)
    hit = _ACTION_CACHE.get(key)
    if hit is not None:
        return hit
    arrays = K.act_word(K.as_word_array(list(letters)), m, sphere_m, budget)
    value = tuple(tuple(int(x) for x in a) for a in arrays)
    if len(_ACTION_CACHE) < _ACTION_CACHE_MAX:
        _ACTION_CACHE[key] = value
    return value


def _wrap(m: int, images) -> FreeAutomorphism:
    return FreeAutomorphism(m, tuple(FreeWord(m, im) for im in images))


def artin_action(w: Word, m: int, *, budget: int | None = None) -> FreeAutomorphism:
    """The braid action of ``w`` on the free group of rank ``m`` (disk model)."""
    for a in w.letters:
        if abs(a) > m - 1:
            raise ValueError(f"letter sigma_{abs(a)} needs more than {m} strands")
    return _wrap(m, _action_images(w.letters, m, 0, budget or default_budget()))


def sphere_action(w: Word, ctx: Context, *, budget: int | None = None) -> FreeAutomorphism:
    """The marked-sphere action on the rank ``2n+1`` free group."""
    m = ctx.num_arcs
    return _wrap(m, _action_images(w.letters, m, m, budget or default_budget()))


def is_inner(phi: FreeAutomorphism) -> FreeWord | None:
    """Return ``w`` with ``phi = conj_w`` (``x -> w x w^{-1}``), or ``None``.

    Procedure: cyclically reduce ``phi(x_1)``; unless the core is literally
    ``x_1`` the map is not inner.  Writing ``phi(x_1) = u x_1 u^{-1}``, any
    conjugator has the shape ``u x_1^c``; the unique feasible ``c`` is read
    off ``u^{-1} phi(x_2) u`` which must equal ``x_1^c x_2 x_1^{-c}``.
    Every generator is then verified against the candidate.
    """
    m = phi.rank
    u, core = phi.images[0].cyclic_split()
    if core.letters != (1,):
        return None
    if m == 1:
        return FreeWord.identity(1)
    v = phi.images[1].conjugated_by(u.inverse())
    run = 0
    for a in v.letters:
        if a == v.letters[0] and abs(a) == 1:
            run += 1
        else:
            break
    c = 0
    if v.letters and abs(v.letters[0]) == 1:
        c = run if v.letters[0] > 0 else -run
    expected = tuple([1 if c > 0 else -1] * abs(c) + [2] + [-1 if c > 0 else 1] * abs(c))
    if v.letters != expected:
        return None
    w = u * FreeWord(m, tuple([1 if c > 0 else -1] * abs(c)))
    for j in range(1, m + 1):
        if phi.images[j - 1] != FreeWord.generator(m, j).conjugated_by(w):
            return None
    return w


# -- the three equality backends ---------------------------------------------


def _require_disk_letters(w: Word, ctx: Context) -> None:
    top = 2 * ctx.n
    for a in w.letters:
        if abs(a) > top:
            raise ValueError(
                f"letter sigma_{abs(a)} is outside the disk alphabet sigma_1..sigma_{top}"
            )


def eq_disk(u: Word, v: Word, ctx: Context, *, budget: int | None = None) -> bool:
    """Equality in the disk group (braid group on ``2n+1`` strands)."""
    _require_disk_letters(u, ctx)
    _require_disk_letters(v, ctx)
    d = u * v.inverse()
    m = ctx.num_arcs
    images = _action_images(d.letters, m, 0, budget or default_budget())
    return all(im == (j,) for j, im in enumerate(images, start=1))


def _disk_half_twist(ctx: Context) -> Word:
    letters = []
    for a in range(1, 2 * ctx.n + 1):
        letters.extend(range(a, 0, -1))
    return Word(ctx, tuple(letters))


def eq_star(u: Word, v: Word, ctx: Context, *, budget: int | None = None) -> bool:
    """Equality in the disk group modulo its center (capped boundary).

    ``u = v`` iff ``u v^{-1}`` is a power of the full twist: the exponent
    sum forces the only candidate power, which is then checked with
    ``eq_disk``.
    """
    _require_disk_letters(u, ctx)
    _require_disk_letters(v, ctx)
    d = u * v.inverse()
    e = exponent_sum(d)
    full = 2 * ctx.n * (2 * ctx.n + 1)  # exponent sum of the full twist
    if e % full:
        return False
    p = e // full
    return eq_disk(d, _disk_half_twist(ctx) ** (2 * p), ctx, budget=budget)


def eq_sphere(u: Word, v: Word, ctx: Context, *, budget: int | None = None) -> bool:
    """Equality in the marked-sphere group.

    Trivial point permutation plus inner outer-action: the word acts on
    ``x_1..x_{2n+1}`` with the last puncture loop eliminated through
    ``x_1 ... x_{2n+2} = 1``.
    """
    d = u * v.inverse()
    if not psi(d, ctx).is_identity:
        return False
    m = ctx.num_arcs
    images = _action_images(d.letters, m, m, budget or default_budget())
    return is_inner(_wrap(m, images)) is not None


_EQ = {"disk": eq_disk, "star": eq_star, "sphere": eq_sphere}


def order_of(
    w: Word,
    group: str,
    ctx: Context,
    max_order: int | None = None,
    *,
    budget: int | None = None,
) -> int | None:
    """Least ``1 <= d <= max_order`` with ``w^d = 1`` in the group, else None."""
    if group not in _EQ:
        raise ValueError(f"group must be one of {sorted(_EQ)}, got {group!r}")
    eq = _EQ[group]
    if max_order is None:
        max_order = 2 * ctx.num_points + 2
    empty = Word.identity(ctx)
    cur = w
    for d in range(1, max_order + 1):
        if eq(cur, empty, ctx, budget=budget):
            return d
        if d < max_order:
            cur = cur * w
    return None


def boundary_word_is_fixed(phi: FreeAutomorphism, budget: int | None = None) -> bool:
    """Whether the automorphism fixes ``x_1 x_2 ... x_m`` exactly (disk case)."""
    m = phi.rank
    boundary = FreeWord(m, tuple(range(1, m + 1)))
    return phi.apply(boundary, budget) == boundary
