"""Bruhat and weak orders, parabolic cosets W/W_lambda and constrained lifts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .rootsys import RootSystem, Root, Weight, WeylElement, format_weight


class LambdaMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Coset:
    """The coset ``min_rep * W_lam`` of the stabilizer of a dominant weight."""

    lam: Weight
    min_rep: WeylElement

    @property
    def coset_length(self) -> int:
        return self.min_rep.length

    def __str__(self):
        return str(self.min_rep)

    def __repr__(self):
        return "Coset(%s mod W_(%s))" % (str(self.min_rep) or "id", format_weight(self.lam))


@dataclass(frozen=True)
class CosetSpace:
    lam: Weight
    elements: Tuple[Coset, ...]
    by_orbit: Dict[Weight, Coset]
    members: Dict[Coset, Tuple[int, ...]]

    def __len__(self):
        return len(self.elements)


def _stabilizer_pattern(lam):
    return tuple(x == 0 for x in lam)


def coset_space(rs: RootSystem, lam: Sequence[int]) -> CosetSpace:
    """All cosets of W/W_lam, sorted by (length, canonical word)."""
    lam = rs.require_dominant(lam)

    def build():
        groups: Dict[Weight, List[int]] = {}
        for idx, w in enumerate(rs.elements()):
            groups.setdefault(rs.act(w, lam), []).append(idx)
        by_orbit = {}
        members = {}
        for nu, idxs in groups.items():
            # canonical words are shortlex-minimal, so index order is length order
            rep = rs.element_at(min(idxs, key=lambda k: (rs.length_of_index(k),
                                                         rs.element_at(k).word)))
            c = Coset(lam, rep)
            by_orbit[nu] = c
            members[c] = tuple(sorted(idxs))
        elements = tuple(sorted(by_orbit.values(),
                                key=lambda c: (c.coset_length, c.min_rep.word)))
        return CosetSpace(lam, elements, by_orbit, members)

    return rs.memo(("coset_space", lam), build)


def orbit_weight(rs: RootSystem, c: Coset) -> Weight:
    return rs.act(c.min_rep, c.lam)


def coset_from_orbit(rs: RootSystem, lam: Sequence[int], nu: Sequence[int]) -> Coset:
    return coset_space(rs, lam).by_orbit[tuple(nu)]


def coset_of(rs: RootSystem, w: WeylElement, lam: Sequence[int]) -> Coset:
    """Coset of ``w`` modulo W_lam; the minimal representative is found by
    stripping right descents s_i with lam_i = 0."""
    lam = rs.require_dominant(lam)
    idx = rs.index(w)
    changed = True
    while changed:
        changed = False
        for i in range(1, rs.rank + 1):
            if lam[i - 1] == 0:
                nxt = rs.right_mul_index(idx, i)
                if rs.length_of_index(nxt) < rs.length_of_index(idx):
                    idx = nxt
                    changed = True
    return Coset(lam, rs.element_at(idx))


def coset_members(rs: RootSystem, c: Coset) -> List[WeylElement]:
    return [rs.element_at(k) for k in coset_space(rs, c.lam).members[c]]


# -- Bruhat order on W ----------------------------------------------------

def _lower_interval(rs: RootSystem, v_idx: int) -> FrozenSet[int]:
    def build():
        # products of subwords of one reduced word of v make up [e, v]
        reached = {0}
        for i in rs.element_at(v_idx).word:
            reached |= {rs.right_mul_index(x, i) for x in reached}
        return frozenset(reached)

    return rs.memo(("interval", v_idx), build)


def bruhat_leq(rs: RootSystem, u: WeylElement, v: WeylElement) -> bool:
    """u <= v in Bruhat order (subword property on the canonical word of v)."""
    if u.length > v.length:
        return False
    return rs.index(u) in _lower_interval(rs, rs.index(v))


def bruhat_leq_index(rs: RootSystem, u_idx: int, v_idx: int) -> bool:
    return u_idx in _lower_interval(rs, v_idx)


def bruhat_leq_allwords(rs: RootSystem, u: WeylElement, v: WeylElement) -> bool:
    """Brute force: does any reduced word of v contain a reduced word of u?"""
    target = rs.index(u)
    k = u.length
    for word in rs.reduced_words(v):
        for positions in itertools.combinations(range(len(word)), k):
            sub = [word[p] for p in positions]
            if rs.index_of_word(sub) == target:
                return True
    return False


def right_weak_leq(rs: RootSystem, u: WeylElement, v: WeylElement) -> bool:
    """u <=_R v, i.e. l(u) + l(u^-1 v) = l(v)."""
    return u.length + rs.mul(rs.inverse(u), v).length == v.length


# -- cosets -----------------------------------------------------------------

def _check_same_lambda(c1, c2):
    if c1.lam != c2.lam:
        raise LambdaMismatch("cosets over different weights %s and %s"
                             % (format_weight(c1.lam), format_weight(c2.lam)))


def coset_bruhat_leq(rs: RootSystem, c1: Coset, c2: Coset) -> bool:
    _check_same_lambda(c1, c2)
    return bruhat_leq(rs, c1.min_rep, c2.min_rep)


def coset_bruhat_less(rs: RootSystem, c1: Coset, c2: Coset) -> bool:
    return c1 != c2 and coset_bruhat_leq(rs, c1, c2)


def bruhat_covers_down(rs: RootSystem, c: Coset) -> List[Tuple[Coset, Root]]:
    """Cosets covered by ``c``, each with the positive root of its reflection."""

    def build():
        space = coset_space(rs, c.lam)
        nu = orbit_weight(rs, c)
        out = []
        for beta in rs.positive_roots:
            image = rs.reflect_by_root(beta, nu)
            if image == nu:
                continue
            lower = space.by_orbit[image]
            if lower.coset_length == c.coset_length - 1:
                assert bruhat_leq(rs, lower.min_rep, c.min_rep)
                out.append((lower, beta))
        out.sort(key=lambda item: (item[0].min_rep.word, item[1]))
        return tuple(out)

    return list(rs.memo(("covers", c), build))


def max_lift_below(rs: RootSystem, c: Coset, bound: WeylElement) -> Optional[WeylElement]:
    """The Bruhat-maximal element of ``c`` lying below ``bound``, or None."""
    idx = max_lift_below_index(rs, c, rs.index(bound))
    return None if idx is None else rs.element_at(idx)


def max_lift_below_index(rs: RootSystem, c: Coset, bound_idx: int) -> Optional[int]:
    def build():
        below = _lower_interval(rs, bound_idx)
        candidates = [k for k in coset_space(rs, c.lam).members[c] if k in below]
        if not candidates:
            return None
        top = max(candidates, key=rs.length_of_index)
        # uniqueness of the maximum is checked, not assumed
        for k in candidates:
            if not bruhat_leq_index(rs, k, top):
                raise AssertionError("no unique maximal lift in %r below %s"
                                     % (c, rs.element_at(bound_idx)))
        return top

    return rs.memo(("maxlift", c, bound_idx), build)


def max_coset_rep(rs: RootSystem, c: Coset) -> WeylElement:
    return max_lift_below(rs, c, rs.longest)


def min_lift_above_index(rs: RootSystem, c: Coset, floor_idx: int) -> Optional[int]:
    """The Bruhat-minimal element of ``c`` lying above ``floor_idx``, or None."""

    def build():
        candidates = [k for k in coset_space(rs, c.lam).members[c]
                      if bruhat_leq_index(rs, floor_idx, k)]
        if not candidates:
            return None
        bottom = min(candidates, key=rs.length_of_index)
        for k in candidates:
            if not bruhat_leq_index(rs, bottom, k):
                raise AssertionError("no unique minimal lift in %r above %s"
                                     % (c, rs.element_at(floor_idx)))
        return bottom

    return rs.memo(("minlift", c, floor_idx), build)


def min_lift_above(rs: RootSystem, c: Coset, floor: WeylElement) -> Optional[WeylElement]:
    idx = min_lift_above_index(rs, c, rs.index(floor))
    return None if idx is None else rs.element_at(idx)
