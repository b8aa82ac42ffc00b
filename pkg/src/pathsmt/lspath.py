"""Lakshmibai-Seshadri paths: validation, weights, root operators, crystals.

A path of shape lam is a strictly decreasing chain of cosets
tau_0 > tau_1 > ... > tau_r in W/W_lam together with turning points
0 < a_1 < ... < a_r < 1.  As a piecewise-linear map it runs in direction
tau_j(lam) for time a_{j+1} - a_j (with a_0 = 0, a_{r+1} = 1).

Root operators are computed on the piecewise-linear representation (a list of
``(direction, duration)`` segments) and converted back to LS normal form, so
the same code also acts on concatenations of paths (see :mod:`pathsmt.smt`).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bruhat import (
    Coset, bruhat_covers_down, coset_bruhat_leq, coset_bruhat_less, coset_from_orbit,
    coset_of, coset_space, orbit_weight,
)
from .rootsys import RootSystem, Weight, WeylElement, character_of_weights, parse_word

Segment = Tuple[Weight, Fraction]


class NotLSPath(ValueError):
    def __init__(self, segment: int, message: str = ""):
        self.segment = segment
        super().__init__(message or "integrality condition fails on segment %d" % segment)


class ChainNotDecreasing(ValueError):
    pass


class BadTurningPoints(ValueError):
    pass


class StringIncomplete(ValueError):
    pass


class InternalNonIntegralWeight(ArithmeticError):
    pass


@dataclass(frozen=True)
class LSPath:
    lam: Weight
    chain: Tuple[Coset, ...]
    a: Tuple[Fraction, ...]

    @property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(c.min_rep.word for c in self.chain)

    def sort_key(self):
        return (self.words, self.a)

    def is_straight(self) -> bool:
        return len(self.chain) == 1 and self.chain[0].coset_length == 0

    def times(self) -> List[Fraction]:
        return [Fraction(0), *self.a, Fraction(1)]

    def __str__(self):
        chain = ", ".join(str(c) or "id" for c in self.chain)
        if not self.a:
            return "(%s;)" % chain
        return "(%s; %s)" % (chain, ", ".join(str(x) for x in self.a))

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "chain": [str(c) for c in self.chain],
            "a": [str(x) for x in self.a],
        }


def parse_fraction(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def path_from_dict(rs: RootSystem, data: dict, lam: Optional[Sequence[int]] = None) -> LSPath:
    """Parse the JSON form ``{"lambda": [...], "chain": ["21", "1"], "a": ["1/2"]}``
    and validate it."""
    if "lambda" in data:
        lam = data["lambda"]
    if lam is None:
        raise ValueError("path has no shape: give \"lambda\" or a weight")
    lam = rs.require_dominant(lam)
    chain = [coset_of(rs, rs.element(parse_word(str(w))), lam) for w in data["chain"]]
    a = [parse_fraction(x) for x in data.get("a", [])]
    return validate_ls(rs, lam, chain, a)


def path_from_json(rs: RootSystem, text: str, lam=None) -> LSPath:
    return path_from_dict(rs, json.loads(text), lam)


def make_path(rs: RootSystem, lam: Sequence[int], words: Iterable, a: Iterable = ()) -> LSPath:
    """Convenience constructor: ``make_path(rs, (2, 2), ["21", "1"], ["1/2"])``."""
    return path_from_dict(rs, {"lambda": list(lam), "chain": list(words), "a": list(a)})


def straight_path(rs: RootSystem, lam: Sequence[int]) -> LSPath:
    lam = rs.require_dominant(lam)
    return LSPath(lam, (coset_of(rs, rs.identity, lam),), ())


# -- validation -----------------------------------------------------------

def _segment_integral(rs, top: Coset, bottom: Coset, a: Fraction) -> bool:
    """Search for a saturated cover chain top = k_0 > ... > k_r = bottom with
    a * <k_{j-1}(lam), beta_j^vee> integral at every step."""
    if top == bottom:
        return True
    nu = orbit_weight(rs, top)
    for lower, beta in bruhat_covers_down(rs, top):
        if lower.coset_length < bottom.coset_length:
            continue
        if (a * rs.pairing(nu, beta)).denominator != 1:
            continue
        if not coset_bruhat_leq(rs, bottom, lower):
            continue
        if _segment_integral(rs, lower, bottom, a):
            return True
    return False


def validate_ls(rs: RootSystem, lam: Sequence[int], chain: Sequence[Coset],
                a: Sequence) -> LSPath:
    lam = rs.require_dominant(lam)
    chain = tuple(chain)
    a = tuple(parse_fraction(x) for x in a)
    if not chain:
        raise ChainNotDecreasing("empty chain")
    for c in chain:
        if c.lam != lam:
            raise ChainNotDecreasing("coset %r is not over the shape" % (c,))
    if len(a) != len(chain) - 1:
        raise BadTurningPoints("expected %d turning points, got %d"
                               % (len(chain) - 1, len(a)))
    points = (Fraction(0),) + a + (Fraction(1),)
    for x, y in zip(points, points[1:]):
        if not x < y:
            raise BadTurningPoints("turning points must satisfy 0 < a_1 < ... < a_r < 1")
    for k, (upper, lower) in enumerate(zip(chain, chain[1:])):
        if not coset_bruhat_less(rs, lower, upper):
            raise ChainNotDecreasing("chain not strictly decreasing at position %d" % (k + 1))
    for k, (upper, lower) in enumerate(zip(chain, chain[1:])):
        if not _segment_integral(rs, upper, lower, a[k]):
            raise NotLSPath(k + 1)
    return LSPath(lam, chain, a)


def is_ls_path(rs: RootSystem, lam, chain, a) -> bool:
    try:
        validate_ls(rs, lam, chain, a)
    except (NotLSPath, ChainNotDecreasing, BadTurningPoints):
        return False
    return True


# -- piecewise-linear form --------------------------------------------------

def segments(rs: RootSystem, path: LSPath) -> List[Segment]:
    t = path.times()
    return [(orbit_weight(rs, c), t[k + 1] - t[k]) for k, c in enumerate(path.chain)]


def _normalize_segments(segs: Iterable[Segment]) -> List[Segment]:
    out: List[Segment] = []
    for direction, length in segs:
        if length == 0:
            continue
        if out and out[-1][0] == direction:
            out[-1] = (direction, out[-1][1] + length)
        else:
            out.append((direction, length))
    return out


def path_from_segments(rs: RootSystem, lam: Weight, segs: Sequence[Segment]) -> LSPath:
    segs = _normalize_segments(segs)
    chain = tuple(coset_from_orbit(rs, lam, d) for d, _ in segs)
    a = []
    t = Fraction(0)
    for _, length in segs[:-1]:
        t += length
        a.append(t)
    if t + segs[-1][1] != 1:
        raise ValueError("segments do not have total duration 1")
    return LSPath(lam, chain, tuple(a))


def endpoint(segs: Sequence[Segment]) -> Tuple[Fraction, ...]:
    n = len(segs[0][0])
    return tuple(sum((length * d[j] for d, length in segs), Fraction(0)) for j in range(n))


def path_weight(rs: RootSystem, path: LSPath) -> Weight:
    """pi(1) = sum_j (a_{j+1} - a_j) tau_j(lam); must be a lattice weight."""
    end = endpoint(segments(rs, path))
    if any(x.denominator != 1 for x in end):
        raise InternalNonIntegralWeight("path %s ends at a non-lattice point" % path)
    return tuple(int(x) for x in end)


def _heights(segs, i):
    hs = [Fraction(0)]
    for d, length in segs:
        hs.append(hs[-1] + length * d[i - 1])
    return hs


def _reflect_window(rs, segs, i, start, stop):
    """Reflect by s_i the segments lying in the time window [start, stop]."""
    out = []
    t = Fraction(0)
    for d, length in segs:
        s, e = t, t + length
        t = e
        pieces = []
        cut_points = sorted({s, e, *(x for x in (start, stop) if s < x < e)})
        for u, v in zip(cut_points, cut_points[1:]):
            inside = start <= u and v <= stop
            pieces.append((rs.reflect(i, d) if inside else d, v - u))
        out.extend(pieces)
    return _normalize_segments(out)


def lower_segments(rs: RootSystem, segs: Sequence[Segment], i: int) -> Optional[List[Segment]]:
    """The root operator f_i on a piecewise-linear path, or None."""
    hs = _heights(segs, i)
    q = min(hs)
    if hs[-1] - q < 1:
        return None
    times = [Fraction(0)]
    for _, length in segs:
        times.append(times[-1] + length)
    k = max(j for j, h in enumerate(hs) if h == q)
    j = next(j for j in range(k + 1, len(hs)) if hs[j] >= q + 1)
    slope = segs[j - 1][0][i - 1]
    x = times[j - 1] + (q + 1 - hs[j - 1]) / slope
    return _reflect_window(rs, segs, i, times[k], x)


def raise_segments(rs: RootSystem, segs: Sequence[Segment], i: int) -> Optional[List[Segment]]:
    """The root operator e_i on a piecewise-linear path, or None."""
    hs = _heights(segs, i)
    q = min(hs)
    if q > -1:
        return None
    times = [Fraction(0)]
    for _, length in segs:
        times.append(times[-1] + length)
    k = min(j for j, h in enumerate(hs) if h == q)
    j = max(j for j in range(k) if hs[j] >= q + 1)
    slope = segs[j][0][i - 1]
    y = times[j] + (q + 1 - hs[j]) / slope
    return _reflect_window(rs, segs, i, y, times[k])


def root_op_f(rs: RootSystem, path: LSPath, i: int) -> Optional[LSPath]:
    segs = lower_segments(rs, segments(rs, path), i)
    return None if segs is None else path_from_segments(rs, path.lam, segs)


def root_op_e(rs: RootSystem, path: LSPath, i: int) -> Optional[LSPath]:
    segs = raise_segments(rs, segments(rs, path), i)
    return None if segs is None else path_from_segments(rs, path.lam, segs)


def epsilon(rs: RootSystem, path: LSPath, i: int) -> int:
    return int(-min(_heights(segments(rs, path), i)))


def phi(rs: RootSystem, path: LSPath, i: int) -> int:
    hs = _heights(segments(rs, path), i)
    return int(hs[-1] - min(hs))


def apply_lowering(rs: RootSystem, path: LSPath, ops: Sequence[int]) -> Optional[LSPath]:
    """Apply f_{ops[-1]} first and f_{ops[0]} last, like the word f_{i_1}...f_{i_k}."""
    for i in reversed(ops):
        path = root_op_f(rs, path, i)
        if path is None:
            return None
    return path


# -- crystals ---------------------------------------------------------------

def enumerate_B(rs: RootSystem, lam: Sequence[int]) -> List[LSPath]:
    """All LS paths of shape lam: the closure of the straight path under the f_i."""
    lam = rs.require_dominant(lam)

    def build():
        start = straight_path(rs, lam)
        seen = {start}
        queue = deque([start])
        while queue:
            path = queue.popleft()
            for i in range(1, rs.rank + 1):
                nxt = root_op_f(rs, path, i)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return tuple(sorted(seen, key=LSPath.sort_key))

    return list(rs.memo(("B", lam), build))


def demazure_subset(rs: RootSystem, lam: Sequence[int], tau: WeylElement) -> List[LSPath]:
    lam = rs.require_dominant(lam)
    top = coset_of(rs, tau, lam)
    return [p for p in enumerate_B(rs, lam) if coset_bruhat_leq(rs, p.chain[0], top)]


def path_character(rs: RootSystem, paths: Iterable[LSPath]) -> Dict[Weight, int]:
    return character_of_weights(path_weight(rs, p) for p in paths)


def string(rs: RootSystem, path: LSPath, directions: Sequence[int]) -> List[int]:
    """Adapted string: n_1 = max number of e_{d_1}, then n_2 of e_{d_2}, ..."""
    out = []
    for i in directions:
        n = 0
        while True:
            nxt = root_op_e(rs, path, i)
            if nxt is None:
                break
            path, n = nxt, n + 1
        out.append(n)
    if not path.is_straight():
        raise StringIncomplete("string along %s does not reach the straight path"
                               % "".join(map(str, directions)))
    return out


# -- brute-force enumeration --------------------------------------------------

def denominator_bound(rs: RootSystem, lam: Sequence[int]) -> int:
    """lcm of the nonzero |<mu, beta^vee>| over mu in W lam and positive beta."""
    values = {abs(rs.pairing(mu, beta)) for mu in rs.orbit(lam) for beta in rs.positive_roots}
    values.discard(0)
    return math.lcm(1, *values)


def enumerate_ls_direct(rs: RootSystem, lam: Sequence[int]) -> List[LSPath]:
    """Every (chain, turning points) pair accepted by validate_ls, found by
    scanning all decreasing chains and all grid points k/N."""
    lam = rs.require_dominant(lam)
    space = coset_space(rs, lam).elements
    n = denominator_bound(rs, lam)
    grid = [Fraction(k, n) for k in range(1, n)]
    lower = {c: [d for d in space if coset_bruhat_less(rs, d, c)] for c in space}
    found = []

    def chains(prefix):
        yield prefix
        if len(prefix) - 1 < len(grid):
            for d in lower[prefix[-1]]:
                yield from chains(prefix + (d,))

    for start in space:
        for chain in chains((start,)):
            for a in itertools.combinations(grid, len(chain) - 1):
                if is_ls_path(rs, lam, chain, a):
                    found.append(LSPath(lam, chain, tuple(a)))
    return sorted(found, key=LSPath.sort_key)
