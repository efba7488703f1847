"""Lower central series machinery.

Abelianization of presentations, commutator-quotient computations via
Schreier rewriting and coinvariants (full for finite cyclic abelianization,
windowed for Z-indexed presentations), a class-2 nilpotent collector, closed
form rank formulas for two free-by-cyclic style lower central series, and
normal closures of twisted commutators in finite groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from sympy import mobius

from .intlin import IntMatrix, abelian_invariants, mat_pow, matrix, smith_normal_form
from .models import FiniteTable
from .presentations import IndexedPresentation, Presentation
from .reidschreier import rs_finite_cyclic
from .words import Gen, Word, exponent_vector, free_reduce, invert, letter, multiply


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion entries must exceed 1")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " x ".join(parts) if parts else "1"


def _invariants(relation_rows: Sequence[Sequence[int]], num_gens: int) -> AbelianInvariants:
    free_rank, torsion = abelian_invariants(relation_rows, num_gens)
    return AbelianInvariants(free_rank, torsion)


def abelianization(p: Presentation) -> AbelianInvariants:
    """Smith form of the relator exponent matrix."""
    rows = [exponent_vector(r, p.generators) for r in p.relators]
    return _invariants(rows, len(p.generators))


def gamma2_mod_gamma3(p: Presentation, t: Gen) -> AbelianInvariants:
    """Second lower central quotient of a group with finite cyclic
    abelianization: Schreier-present the commutator subgroup over the
    transversal {t^j}, then abelianize together with the coinvariance
    relators identifying each Schreier generator with its t-conjugate."""
    ab = abelianization(p)
    if ab.free_rank != 0 or len(ab.torsion) != 1:
        raise ValueError("abelianization %s is not finite cyclic" % ab)
    m = ab.torsion[0]
    # generator weights: image coordinates in the cyclic invariant factor
    rel_rows = [exponent_vector(r, p.generators) for r in p.relators]
    snf = smith_normal_form(matrix(rel_rows) if rel_rows
                            else IntMatrix(((0,) * len(p.generators),)))
    target = None
    for j in range(min(snf.d.nrows, snf.d.ncols)):
        if snf.d[j, j] == m:
            target = j
    if target is None:
        raise ValueError("no invariant factor of order %d" % m)
    raw = {g: snf.q[i, target] % m for i, g in enumerate(p.generators)}
    unit = pow(raw[t], -1, m)   # raises if t does not generate the quotient
    weights = {g: (raw[g] * unit) % m for g in p.generators}
    rs = rs_finite_cyclic(p, m, t, weights)
    sub = rs.presentation
    relators = list(sub.relators)
    for s in sub.generators:
        ambient = rs.dictionary[s]
        conj = multiply(letter(t), ambient, invert(letter(t)))
        relators.append(multiply(rs.rewriter(conj, 0), invert(letter(s))))
    rows = [exponent_vector(r, sub.generators) for r in relators]
    return _invariants(rows, len(sub.generators))


@dataclass(frozen=True)
class WindowedInvariants:
    invariants: AbelianInvariants
    stable: bool
    window: int

    def __str__(self) -> str:
        return "%s [K=%d%s]" % (self.invariants, self.window,
                                ", stable" if self.stable else ", UNSTABLE")


def windowed_coinvariants(ip: IndexedPresentation, window: Optional[int] = None,
                          identify: Union[bool, Iterable[str]] = ()) -> WindowedInvariants:
    """Abelian invariants of a windowed presentation, optionally identifying
    each listed family with its index shift (the abelianized conjugation
    action of the transversal generator).  Stable when windows K and K+1
    agree."""
    k = ip.window if window is None else window
    if k < 2:
        raise ValueError("window must be >= 2")
    fams = tuple(ip.families) if identify is True else tuple(identify)
    unknown = [f for f in fams if f not in ip.families]
    if unknown:
        raise ValueError("unknown family %r" % unknown[0])

    def at(kk: int) -> AbelianInvariants:
        pres = ip.instantiate(kk)
        relators = list(pres.relators)
        for f in fams:
            for i in range(-kk, kk):
                relators.append(free_reduce([(Gen(f, (i,)), 1),
                                             (Gen(f, (i + 1,)), -1)]))
        rows = [exponent_vector(r, pres.generators) for r in relators]
        return _invariants(rows, len(pres.generators))

    here, nxt = at(k), at(k + 1)
    return WindowedInvariants(here, here == nxt, k)


def shifted_z_family_system() -> IndexedPresentation:
    """Abelianized conjugation data for the rank-2 free kernel with basis
    z_i = t^i x t^-(i+1): both ambient generators shift z_i to z_{i+1}, and
    the half-twist sends z_i to the inverse of z_{i-1} (abelianized)."""
    shift = lambda k: free_reduce([(Gen("z", (k,)), 1), (Gen("z", (k + 1,)), -1)])
    flip = lambda k: free_reduce([(Gen("z", (k,)), 1), (Gen("z", (k - 1,)), 1)])
    return IndexedPresentation("zshift", (), ("z",), (), (shift, flip), 3)


# ---------------------------------------------------------------------------
# class-2 nilpotent collection

def nilpotent_class2_gamma2(p: Presentation) -> AbelianInvariants:
    """Second lower central quotient computed by collection in the free
    class-2 nilpotent group: basic commutators [g_i, g_j] (i < j) modulo the
    relator images, their brackets with generators, and commutator parts of
    relator combinations that die in the abelianization."""
    gens = list(p.generators)
    g = len(gens)
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    pair_index = {pq: n for n, pq in enumerate(pairs)}

    def collect(w: Word):
        a = [0] * g
        c = [0] * len(pairs)
        for x, s in w.letters():
            k = gens.index(x)
            for j in range(k + 1, g):
                c[pair_index[(k, j)]] -= a[j] * s
            a[k] += s
        return a, c

    images = [collect(r) for r in p.relators]
    rows = []
    # brackets of relator abelianizations with each generator
    for a, _c in images:
        for k in range(g):
            row = [0] * len(pairs)
            for i in range(k):
                row[pair_index[(i, k)]] += a[i]
            for j in range(k + 1, g):
                row[pair_index[(k, j)]] -= a[j]
            rows.append(row)
    # commutator parts of relator products with trivial exponent sum
    if images:
        a_mat = matrix([a for a, _ in images])
        snf = smith_normal_form(a_mat)
        rank = sum(1 for i in range(min(snf.d.nrows, snf.d.ncols))
                   if snf.d[i, i] != 0)
        for i in range(rank, len(images)):
            combo = [snf.p[i, r] for r in range(len(images))]
            row = [sum(m * images[r][1][n] for r, m in enumerate(combo))
                   for n in range(len(pairs))]
            rows.append(row)
    return _invariants(rows, len(pairs))


# ---------------------------------------------------------------------------
# closed-form lower central series ranks

@dataclass(frozen=True)
class RankReport:
    i: int
    rank: int
    alpha: tuple[tuple[int, Fraction], ...]


_M = matrix([[0, -1], [-1, 1]])


def _trace(m: IntMatrix) -> int:
    return sum(m[i, i] for i in range(m.nrows))


def alpha_k(k: int) -> Fraction:
    if k < 2:
        raise ValueError("need k >= 2")
    return Fraction(_trace(mat_pow(_M, k)) - 1, k)


def _divisor_sum(n: int, k_alpha) -> Fraction:
    total = Fraction(0)
    for k in range(2, n + 1):
        if n % k == 0:
            total += int(mobius(n // k)) * k_alpha(k)
    return total / n


def lcs_rank_z2_free(i: int) -> RankReport:
    """Rank of the i-th lower central quotient of the two-generator group
    with a single commuting-square relation (free-by-infinite-cyclic with
    monodromy of trace 1)."""
    if i < 2:
        raise ValueError("need i >= 2")
    alphas = {}

    def k_alpha(k: int) -> Fraction:
        alphas[k] = alpha_k(k)
        return k * alphas[k]

    total = Fraction(0)
    for j in range(0, i - 1):
        total += _divisor_sum(i - j, k_alpha)
    if total.denominator != 1:
        raise ValueError("non-integral rank at i=%d: %s" % (i, total))
    return RankReport(i, int(total), tuple(sorted(alphas.items())))


def lcs_rank_torus(i: int) -> RankReport:
    """Rank of the i-th lower central quotient in the torus case, where
    k alpha_k = 2^k + 2(-1)^k and the outer sum starts at j = 1."""
    if i < 2:
        raise ValueError("need i >= 2")
    alphas = {}

    def k_alpha(k: int) -> Fraction:
        alphas[k] = Fraction(2 ** k + 2 * (-1) ** k, k)
        return 2 ** k + 2 * (-1) ** k

    total = Fraction(0)
    for j in range(1, i - 1):
        total += _divisor_sum(i - j, k_alpha)
    if total.denominator != 1:
        raise ValueError("non-integral rank at i=%d: %s" % (i, total))
    return RankReport(i, int(total), tuple(sorted(alphas.items())))


# ---------------------------------------------------------------------------
# twisted-commutator closures in finite groups

def _apply_action(table: FiniteTable, actions: dict, w: Word, h: str) -> str:
    for g, s in reversed(list(w.letters())):
        perm = actions[g]
        if s < 0:
            perm = {v: k for k, v in perm.items()}
        h = perm[h]
    return h


def hat_subgroup(table: FiniteTable, actions: dict, acting_words: Sequence[Word],
                 budget: int = 20000) -> tuple[str, ...]:
    """Normal closure of { phi(w)(h) h^-1 : w acting word, h in the group }.

    `actions` maps each acting generator to a permutation of element names."""
    seeds = set()
    for w in acting_words:
        for h in table.elements:
            seeds.add(table.mul(_apply_action(table, actions, w, h),
                                table.inv(h)))
    closed = set(seeds)
    closed.add(table.identity())
    frontier = list(closed)
    steps = 0
    while frontier:
        x = frontier.pop()
        new = [table.inv(x)]
        new.extend(table.mul(x, y) for y in closed)
        new.extend(table.mul(table.mul(g, x), table.inv(g))
                   for g in table.elements)
        for y in new:
            steps += 1
            if steps > budget:
                raise ValueError("closure budget exceeded")
            if y not in closed:
                closed.add(y)
                frontier.append(y)
    return tuple(sorted(closed))
