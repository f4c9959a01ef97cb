"""The degree-``k`` cyclic branched cover as a combinatorial surface.

Model.  Cutting the sphere along the chain of arcs ``l_1..l_{2n+1}`` leaves
one disk; the cover is ``k`` copies of that disk ("sheets" ``1..k``) glued
along the ``k`` lifts of each arc.  Crossing arc ``i`` upward adds
``c_i = 1`` (odd ``i``) or ``0`` (even ``i``) to the sheet, which realizes
the alternating-monodromy cover.  A lifted arc is labeled by the sheet of
the face on its upper side: ``zeta`` (the deck rotation) then shifts all
labels by one.

Contracting the sheet-1 arc chain (a spanning tree of the 1-skeleton)
produces a one-vertex complex on the same surface, where first homology and
the intersection form become finite combinatorics: cycles are integer
vectors over the remaining ``(2n+1)(k-1)`` loops, faces give the relation
lattice, and the pairing of two loop classes is the chord-crossing sign of
their four ends in the cyclic order of the vertex link.

Twists act by transvections ``x -> x + <x, c> c``; the deck rotation and
the half-turn act through their edge maps directly.  The homology
representation is a necessary-condition shadow only (it is not faithful);
every verification built on it is labeled accordingly by the theorem suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import intmat
from .errors import DoesNotLiftError
from .liftability import CurveClass, curve_monodromy, gamma_curve
from .words import Context

# Global handedness of the intersection form.  Pinned by the requirement
# that the boundary-twist factorization of the deck rotation reproduces the
# deck rotation matrix itself (theorem suite / acceptance).
_ORIENT = 1


def _c(i: int) -> int:
    return 1 if i % 2 == 1 else 0


@dataclass(frozen=True, eq=False)
class CoverSurface:
    ctx: Context
    n_vertices: int
    n_edges: int
    n_faces: int
    loops: tuple[tuple[int, int], ...]
    loop_index: dict
    face_sides: tuple[tuple[tuple[int, int, int], ...], ...]  # (arc, label, dir)
    relations: np.ndarray  # k x m, object
    crossing: np.ndarray  # m x m pairing of loop classes, object
    basis: np.ndarray  # m x 2g, object
    proj: np.ndarray  # 2g x m, object
    J: np.ndarray  # 2g x 2g, object
    Jinv: np.ndarray

    @property
    def genus(self) -> int:
        return self.ctx.genus

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    @property
    def h1_rank(self) -> int:
        return self.basis.shape[1]

    def info(self) -> dict:
        return {
            "n": self.ctx.n,
            "k": self.ctx.k,
            "vertices": self.n_vertices,
            "edges": self.n_edges,
            "faces": self.n_faces,
            "genus": self.genus,
            "euler_characteristic": self.euler_characteristic,
            "h1_rank": self.h1_rank,
        }


@dataclass(frozen=True)
class HomologyBasis:
    rank: int
    cycles: np.ndarray  # m x rank: loop coordinates of the basis classes
    J: np.ndarray


@dataclass(frozen=True, eq=False)
class LiftedCurve:
    base: CurveClass
    label: int
    crossings: tuple[tuple[int, int, int], ...]  # (arc, edge label, direction)
    class_vector: np.ndarray = field(repr=False)  # 2g object ints

    def edge_chain(self, surface: "CoverSurface") -> dict:
        """The class as an integer chain over all edges (tree edges included)."""
        x = surface.basis @ self.class_vector
        chain: dict = {}
        k = surface.ctx.k
        for i in range(1, surface.ctx.num_arcs + 1):
            tree = 0
            for l in range(2, k + 1):
                coeff = int(x[surface.loop_index[(i, l)]])
                if coeff:
                    chain[(i, l)] = coeff
                tree -= coeff
            if tree:
                chain[(i, 1)] = tree
        return chain


def _norm(l: int, k: int) -> int:
    return (l - 1) % k + 1


def _chord_sign(a_in: int, a_out: int, b_in: int, b_out: int, size: int) -> int:
    ra = (a_out - a_in) % size
    rb1 = (b_in - a_in) % size
    rb2 = (b_out - a_in) % size
    in1 = 0 < rb1 < ra
    in2 = 0 < rb2 < ra
    if in1 == in2:
        return 0
    return 1 if in1 else -1


@lru_cache(maxsize=None)
def build_cover(ctx: Context) -> CoverSurface:
    """Build the cover and its homology apparatus for the given ``(n, k)``."""
    n, k = ctx.n, ctx.k
    arcs = ctx.num_arcs

    loops = tuple((i, l) for i in range(1, arcs + 1) for l in range(2, k + 1))
    loop_index = {e: t for t, e in enumerate(loops)}
    m = len(loops)

    face_sides = []
    for s in range(1, k + 1):
        sides = []
        for i in range(1, arcs + 1):
            lab = _norm(s + _c(i), k)
            if lab != 1:
                sides.append((i, lab, 1))
        if s != 1:
            for i in range(arcs, 0, -1):
                sides.append((i, s, -1))
        face_sides.append(tuple(sides))
    face_sides = tuple(face_sides)

    relations = np.zeros((k, m), dtype=object)
    for s, sides in enumerate(face_sides):
        for (i, lab, d) in sides:
            relations[s, loop_index[(i, lab)]] += d

    # vertex link of the one-vertex complex: ends 2e (tail), 2e+1 (head)
    succ = [-1] * (2 * m)
    for sides in face_sides:
        L = len(sides)
        for t in range(L):
            i1, lab1, d1 = sides[t]
            e1 = loop_index[(i1, lab1)]
            arrival = 2 * e1 + (1 if d1 > 0 else 0)
            i2, lab2, d2 = sides[(t + 1) % L]
            e2 = loop_index[(i2, lab2)]
            departure = 2 * e2 + (0 if d2 > 0 else 1)
            if succ[arrival] != -1:
                raise AssertionError("edge end visited twice; face data corrupt")
            succ[arrival] = departure
    if m and min(succ) < 0:
        raise AssertionError("edge end never visited; face data corrupt")

    pos = [-1] * (2 * m)
    if m:
        x = 0
        count = 0
        while True:
            pos[x] = count
            count += 1
            x = succ[x]
            if x == 0:
                break
        if count != 2 * m:
            raise AssertionError("vertex link is not a single circle")

    crossing = np.zeros((m, m), dtype=object)
    for e in range(m):
        for f in range(e + 1, m):
            sgn = _chord_sign(
                pos[2 * e + 1], pos[2 * e], pos[2 * f + 1], pos[2 * f], 2 * m
            )
            crossing[e, f] = _ORIENT * sgn
            crossing[f, e] = -_ORIENT * sgn

    if not np.array_equal(relations @ crossing, np.zeros((k, m), dtype=object)):
        raise AssertionError("face relations do not pair to zero")

    D, U, Uinv, _V, r = intmat.smith_normal_form(relations.T)
    for t in range(r):
        if D[t, t] != 1:
            raise AssertionError("surface homology has torsion; complex corrupt")
    basis = Uinv[:, r:]
    proj = U[r:, :]

    J = basis.T @ crossing @ basis
    if J.shape[0] != 2 * ctx.genus:
        raise AssertionError("homology rank disagrees with the genus")
    if not np.array_equal(J, -J.T):
        raise AssertionError("intersection form is not skew")
    if intmat.det_exact(J) != 1:
        raise AssertionError("intersection form is not unimodular")
    Jinv = intmat.inverse_unimodular(J)

    surface = CoverSurface(
        ctx=ctx,
        n_vertices=ctx.num_points,
        n_edges=k * arcs,
        n_faces=k,
        loops=loops,
        loop_index=loop_index,
        face_sides=face_sides,
        relations=relations,
        crossing=crossing,
        basis=basis,
        proj=proj,
        J=J,
        Jinv=Jinv,
    )
    chi = surface.euler_characteristic
    if chi != 2 - 2 * ctx.genus:
        raise AssertionError(f"Euler characteristic {chi} != {2 - 2 * ctx.genus}")
    return surface


def homology(surface: CoverSurface) -> HomologyBasis:
    return HomologyBasis(
        rank=surface.h1_rank, cycles=surface.basis.copy(), J=surface.J.copy()
    )


# -- lifted curves -----------------------------------------------------------


def _crossing_sequence(base: CurveClass) -> list[tuple[int, int]]:
    """Arc crossings (arc, direction) of the curve; +1 crosses upward."""
    arcs = base.ctx.num_arcs
    seq: list[tuple[int, int]] = []
    for a in base.letters:
        j = abs(a)
        pairs = [(j, 1), (j - 1, -1)] if a > 0 else [(j - 1, 1), (j, -1)]
        for arc, d in pairs:
            if 1 <= arc <= arcs:
                seq.append((arc, d))
    return seq


def _round_sequence(ctx: Context, i: int) -> list[tuple[int, int]]:
    """Minimal crossing sequence of the round curve about points ``i, i+1``.

    Starts on the arc below the enclosed points, so the start sheet is the
    lower-face sheet; this is the labeling under which the alternating
    families form chains.
    """
    arcs = ctx.num_arcs
    if i == 1:
        return [(2, 1)]
    if i == arcs:
        return [(arcs - 1, -1)]
    return [(i + 1, 1), (i - 1, -1)]


def lift_cycle(
    surface: CoverSurface, base: CurveClass, _sequence: list[tuple[int, int]] | None = None
) -> list[LiftedCurve]:
    """The ``k`` lifts of a liftable curve, labeled by their start sheet."""
    ctx = surface.ctx
    mono = curve_monodromy(base, ctx)
    if mono != 0:
        raise DoesNotLiftError(
            f"curve {base.to_text()!r} has monodromy {mono} mod {ctx.k}; it does not lift"
        )
    seq = _crossing_sequence(base) if _sequence is None else _sequence
    k = ctx.k
    curves = []
    for label in range(1, k + 1):
        s = label
        crossings = []
        for arc, d in seq:
            lab = _norm(s + _c(arc), k) if d > 0 else s
            crossings.append((arc, lab, d))
            s = _norm(s + d * _c(arc), k)
        if s != label:
            raise AssertionError("zero-monodromy lift failed to close")
        u = np.zeros(surface.h1_rank, dtype=object)
        for arc, lab, d in crossings:
            if lab >= 2:
                u += d * surface.basis[surface.loop_index[(arc, lab)], :]
            else:
                for l in range(2, k + 1):
                    u -= d * surface.basis[surface.loop_index[(arc, l)], :]
        beta = surface.Jinv @ u
        curves.append(
            LiftedCurve(
                base=base, label=label, crossings=tuple(crossings), class_vector=beta
            )
        )
    return curves


def pairing(surface: CoverSurface, a, b) -> int:
    """Algebraic intersection number of two homology classes."""
    va = _class_vector(surface, a)
    vb = _class_vector(surface, b)
    return int(va @ surface.J @ vb)


def _class_vector(surface: CoverSurface, c) -> np.ndarray:
    if isinstance(c, LiftedCurve):
        return c.class_vector
    v = np.asarray(c, dtype=object)
    if v.shape == (surface.h1_rank,):
        return v
    if v.shape == (len(surface.loops),):
        return surface.proj @ v
    raise ValueError("expected a LiftedCurve, a basis vector, or a loop-coordinate vector")


def twist_matrix(surface: CoverSurface, c) -> np.ndarray:
    """Transvection of the right twist about ``c``: ``x -> x + <x, c> c``."""
    v = _class_vector(surface, c)
    T = intmat.identity_object(surface.h1_rank) + np.outer(v, surface.J @ v)
    return T


def is_symplectic(surface: CoverSurface, M: np.ndarray) -> bool:
    return np.array_equal(M.T @ surface.J @ M, surface.J)


def symplectic_inverse(surface: CoverSurface, M: np.ndarray) -> np.ndarray:
    """Inverse of a symplectic integer matrix: ``J^{-1} M^T J``."""
    return surface.Jinv @ M.T @ surface.J


def matrix_power(surface: CoverSurface, M: np.ndarray, e: int) -> np.ndarray:
    out = intmat.identity_object(surface.h1_rank)
    base = M if e >= 0 else symplectic_inverse(surface, M)
    for _ in range(abs(e)):
        out = out @ base
    return out


def _induced_matrix(surface: CoverSurface, chain_map: np.ndarray) -> np.ndarray:
    """Push a cycle-space map down to the homology basis, with checks."""
    for row in surface.relations:
        if not np.array_equal(
            surface.proj @ (chain_map @ row), np.zeros(surface.h1_rank, dtype=object)
        ):
            raise AssertionError("cycle map does not preserve the relation lattice")
    M = surface.proj @ chain_map @ surface.basis
    if not is_symplectic(surface, M):
        raise AssertionError("induced homology map is not symplectic")
    return M


def _deck_cycle_map(surface: CoverSurface) -> np.ndarray:
    ctx = surface.ctx
    k = ctx.k
    m = len(surface.loops)
    C = np.zeros((m, m), dtype=object)
    for t, (i, l) in enumerate(surface.loops):
        nxt = _norm(l + 1, k)
        if nxt != 1:
            C[surface.loop_index[(i, nxt)], t] += 1
        C[surface.loop_index[(i, 2)], t] -= 1
    return C


def _half_turn_cycle_map(surface: CoverSurface) -> np.ndarray:
    ctx = surface.ctx
    k = ctx.k
    m = len(surface.loops)

    def rho(i: int, l: int) -> int:
        return _norm(k - l + 2, k) if i % 2 == 1 else _norm(k - l + 1, k)

    C = np.zeros((m, m), dtype=object)
    for t, (i, l) in enumerate(surface.loops):
        i2 = ctx.num_points - i
        lab = rho(i, l)
        if lab != 1:
            C[surface.loop_index[(i2, lab)], t] -= 1
        lab1 = rho(i, 1)
        if lab1 != 1:
            C[surface.loop_index[(i2, lab1)], t] += 1
    return C


_LIFT_CACHE: dict = {}


def _gamma_lifts(surface: CoverSurface, i: int) -> list[LiftedCurve]:
    key = (surface.ctx, "gamma", i)
    if key not in _LIFT_CACHE:
        ctx = surface.ctx
        _LIFT_CACHE[key] = lift_cycle(
            surface, gamma_curve(i, i + 1, ctx), _round_sequence(ctx, i)
        )
    return _LIFT_CACHE[key]


def lift_rep(surface: CoverSurface, kind: str, index: int | None = None) -> np.ndarray:
    """Homology matrix of a named lift.

    Kinds: ``"t"`` (index i: lift of the twist about points i, i+1),
    ``"h"`` (index i: lift of the half-rotation), ``"r"`` (half-turn),
    ``"r1"`` (rotation lift), ``"zeta"`` (deck rotation), ``"zeta_prime"``
    (the boundary-twist lift, as its twist factorization).
    """
    ctx = surface.ctx
    key = (ctx, kind, index)
    if key in _LIFT_CACHE:
        return _LIFT_CACHE[key].copy()

    n, k = ctx.n, ctx.k
    if kind == "zeta":
        M = _induced_matrix(surface, _deck_cycle_map(surface))
    elif kind == "r":
        M = _induced_matrix(surface, _half_turn_cycle_map(surface))
    elif kind == "t":
        if not (index and 1 <= index <= ctx.num_arcs):
            raise ValueError(f"t-lift index {index} out of range 1..{ctx.num_arcs}")
        M = intmat.identity_object(surface.h1_rank)
        for c in _gamma_lifts(surface, index):
            M = M @ twist_matrix(surface, c)
    elif kind == "h":
        if not (index and 1 <= index <= 2 * n):
            raise ValueError(f"h-lift index {index} out of range 1..{2 * n}")
        low = _gamma_lifts(surface, index)
        high = _gamma_lifts(surface, index + 1)
        order: list[LiftedCurve] = []
        if index % 2 == 1:
            for l in range(1, k):
                order += [low[l - 1], high[l - 1]]
            order.append(low[k - 1])
        else:
            for l in range(k, 1, -1):
                order += [low[l - 1], high[l - 1]]
            order.append(low[0])
        M = intmat.identity_object(surface.h1_rank)
        for c in order:
            M = M @ twist_matrix(surface, c)
    elif kind == "r1":
        from .generators import F_factors

        M = lift_rep(surface, "r")
        for fkind, params, e in F_factors(n):
            base = lift_rep(surface, fkind, params[0])
            M = M @ matrix_power(surface, base, e)
    elif kind == "zeta_prime":
        from .generators import t_chain_factors

        M = intmat.identity_object(surface.h1_rank)
        for fkind, params, e in t_chain_factors(1, ctx.num_arcs):
            base = lift_rep(surface, fkind, params[0])
            M = M @ matrix_power(surface, base, e)
    else:
        raise ValueError(f"unknown lift name {kind!r}")

    if not is_symplectic(surface, M):
        raise AssertionError(f"lift {kind}/{index} is not symplectic")
    _LIFT_CACHE[key] = M
    return M.copy()


def check_normalizes_deck(M: np.ndarray, surface: CoverSurface) -> int | None:
    """Return ``j`` with ``M zeta M^{-1} = zeta^j`` (1 <= j <= k-1), or None."""
    Mz = lift_rep(surface, "zeta")
    conj = M @ Mz @ symplectic_inverse(surface, M)
    power = intmat.identity_object(surface.h1_rank)
    for j in range(1, surface.ctx.k):
        power = power @ Mz
        if np.array_equal(conj, power):
            return j
    return None
