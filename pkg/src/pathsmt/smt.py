"""Standard tuples, defining chains and compatibility with reduced words of w0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .bruhat import (
    Coset, coset_of, coset_space, bruhat_leq_index, max_lift_below_index, min_lift_above_index,
    right_weak_leq,
)
from .lspath import (
    LSPath, enumerate_B, lower_segments, path_from_segments, path_weight, raise_segments,
    segments,
)
from .rootsys import RootSystem, Weight, WeylElement, Word, character_of_weights

PathTuple = Tuple[LSPath, ...]


class NotReducedWordOfW0(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class DefiningChain:
    """Lifts of every coset of every path, grouped by path, weakly decreasing."""

    lifts: Tuple[Tuple[WeylElement, ...], ...]

    def flat(self) -> List[WeylElement]:
        return [w for group in self.lifts for w in group]

    def words(self) -> List[str]:
        return [str(w) for w in self.flat()]


@dataclass(frozen=True)
class AdaptedWordData:
    word: Word
    prefixes: Tuple[WeylElement, ...]
    generators: Tuple[Tuple[WeylElement, int], ...]

    def generator_minors(self, rs: RootSystem) -> List[Tuple[Coset, int]]:
        """The generators as (coset mod W_{varpi_i}, i) pairs, deduplicated."""
        out = []
        for y, i in self.generators:
            c = coset_of(rs, y, rs.fundamental_weight(i))
            if c.coset_length and (c, i) not in out:
                out.append((c, i))
        return out

    def all_prefix_minors(self, rs: RootSystem) -> List[Tuple[Coset, int]]:
        """Every (y_j mod W_{varpi_i}, i) with a non-identity coset."""
        out = []
        for y in self.prefixes:
            for i in range(1, rs.rank + 1):
                c = coset_of(rs, y, rs.fundamental_weight(i))
                if c.coset_length and (c, i) not in out:
                    out.append((c, i))
        return out


@dataclass(frozen=True)
class ProjectedPath:
    """Image of a path in W/W_{varpi_i}, repetitions omitted."""

    index: int
    chain: Tuple[Coset, ...]
    c: Tuple[Fraction, ...]

    def __str__(self):
        chain = ", ".join(str(x) or "id" for x in self.chain)
        return "(%s; %s)" % (chain, ", ".join(str(x) for x in self.c))


def tuple_cosets(t: Sequence[LSPath]) -> List[Coset]:
    return [c for p in t for c in p.chain]


def tuple_shapes(t: Sequence[LSPath]) -> Tuple[Weight, ...]:
    return tuple(p.lam for p in t)


def tuple_weight(rs: RootSystem, t: Sequence[LSPath]) -> Weight:
    total = [0] * rs.rank
    for p in t:
        for j, x in enumerate(path_weight(rs, p)):
            total[j] += x
    return tuple(total)


def _group(t, flat):
    out, k = [], 0
    for p in t:
        out.append(tuple(flat[k:k + len(p.chain)]))
        k += len(p.chain)
    return tuple(out)


# -- defining chains ----------------------------------------------------------

def _greedy_lifts(rs, cosets, bound_idx):
    lifts = []
    for c in cosets:
        bound_idx = max_lift_below_index(rs, c, bound_idx)
        if bound_idx is None:
            return None
        lifts.append(bound_idx)
    return lifts


def greedy_defining_chain(rs: RootSystem, t: Sequence[LSPath]) -> Optional[DefiningChain]:
    """Top-down construction: each lift is the largest element of its coset
    below the previous lift."""
    lifts = _greedy_lifts(rs, tuple_cosets(t), rs.index(rs.longest))
    if lifts is None:
        return None
    return DefiningChain(_group(t, [rs.element_at(k) for k in lifts]))


def find_defining_chain(rs: RootSystem, t: Sequence[LSPath]) -> Optional[DefiningChain]:
    """The pointwise smallest defining chain, or None.

    Existence is decided by the greedy top-down lift.  The returned chain is
    then rebuilt from the bottom with minimal lifts, which is below every
    other defining chain term by term."""
    if greedy_defining_chain(rs, t) is None:
        return None
    cosets = tuple_cosets(t)
    if not cosets:
        return DefiningChain(())
    flat = [rs.index(cosets[-1].min_rep)]
    for c in reversed(cosets[:-1]):
        nxt = min_lift_above_index(rs, c, flat[-1])
        assert nxt is not None
        flat.append(nxt)
    flat.reverse()
    return DefiningChain(_group(t, [rs.element_at(k) for k in flat]))


def all_defining_chains(rs: RootSystem, t: Sequence[LSPath]) -> Iterator[DefiningChain]:
    """Every defining chain, by exhaustive search over coset members."""
    cosets = tuple_cosets(t)
    members = [coset_space(rs, c.lam).members[c] for c in cosets]

    def rec(k, prev, acc):
        if k == len(cosets):
            yield list(acc)
            return
        for x in members[k]:
            if prev is None or bruhat_leq_index(rs, x, prev):
                acc.append(x)
                yield from rec(k + 1, x, acc)
                acc.pop()

    for flat in rec(0, None, []):
        yield DefiningChain(_group(t, [rs.element_at(k) for k in flat]))


def find_defining_chain_exhaustive(rs: RootSystem, t: Sequence[LSPath]) -> Optional[DefiningChain]:
    return next(all_defining_chains(rs, t), None)


def is_standard(rs: RootSystem, t: Sequence[LSPath]) -> bool:
    return find_defining_chain(rs, t) is not None


def is_standard_equal_shapes(rs: RootSystem, t: Sequence[LSPath]) -> bool:
    """For tuples of one shape: tau_r >= kappa_0 >= ... on cosets, and each path
    internally decreasing."""
    from .bruhat import coset_bruhat_leq

    if len({p.lam for p in t}) > 1:
        raise ValueError("shapes differ")
    cosets = tuple_cosets(t)
    return all(coset_bruhat_leq(rs, lo, hi) for hi, lo in zip(cosets, cosets[1:]))


def standard_tuples(rs: RootSystem, shapes: Sequence[Sequence[int]]) -> Iterator[PathTuple]:
    """All standard tuples of the given shape vector, in lexicographic order."""
    crystals = [enumerate_B(rs, lam) for lam in shapes]

    def rec(k, bound, acc):
        if k == len(crystals):
            yield tuple(acc)
            return
        for p in crystals[k]:
            lifts = _greedy_lifts(rs, p.chain, bound)
            if lifts is not None:
                acc.append(p)
                yield from rec(k + 1, lifts[-1], acc)
                acc.pop()

    yield from rec(0, rs.index(rs.longest), [])


def count_standard(rs: RootSystem, shapes: Sequence[Sequence[int]]) -> int:
    """Number of standard tuples, by dynamic programming over the last lift."""
    states: Dict[int, int] = {rs.index(rs.longest): 1}
    for lam in shapes:
        nxt: Dict[int, int] = {}
        for p in enumerate_B(rs, lam):
            for bound, n in states.items():
                lifts = _greedy_lifts(rs, p.chain, bound)
                if lifts is not None:
                    nxt[lifts[-1]] = nxt.get(lifts[-1], 0) + n
        states = nxt
    return sum(states.values())


def standard_character(rs: RootSystem, shapes: Sequence[Sequence[int]]) -> Dict[Weight, int]:
    """Weight multiset of the standard tuples of a shape vector."""
    states: Dict[Tuple[int, Weight], int] = {(rs.index(rs.longest), (0,) * rs.rank): 1}
    for lam in shapes:
        nxt: Dict[Tuple[int, Weight], int] = {}
        for p in enumerate_B(rs, lam):
            wt = path_weight(rs, p)
            for (bound, mu), n in states.items():
                lifts = _greedy_lifts(rs, p.chain, bound)
                if lifts is not None:
                    key = (lifts[-1], tuple(x + y for x, y in zip(mu, wt)))
                    nxt[key] = nxt.get(key, 0) + n
        states = nxt
    out: Dict[Weight, int] = {}
    for (_, mu), n in states.items():
        out[mu] = out.get(mu, 0) + n
    return dict(sorted(out.items()))


# -- root operators on tuples (concatenation) ----------------------------------

def _tuple_segments(rs, t):
    return [seg for p in t for seg in segments(rs, p)]


def _split_segments(rs, t, segs):
    # each component occupies one unit of time
    out = []
    pieces = list(segs)
    for p in t:
        remaining = Fraction(1)
        comp = []
        while remaining:
            d, length = pieces.pop(0)
            if length <= remaining:
                comp.append((d, length))
                remaining -= length
            else:
                comp.append((d, remaining))
                pieces.insert(0, (d, length - remaining))
                remaining = Fraction(0)
        out.append(path_from_segments(rs, p.lam, comp))
    return tuple(out)


def tuple_root_op_f(rs: RootSystem, t: Sequence[LSPath], i: int) -> Optional[PathTuple]:
    """f_i on the concatenation pi_1 * ... * pi_m, cut back into components."""
    segs = lower_segments(rs, _tuple_segments(rs, t), i)
    return None if segs is None else _split_segments(rs, t, segs)


def tuple_root_op_e(rs: RootSystem, t: Sequence[LSPath], i: int) -> Optional[PathTuple]:
    segs = raise_segments(rs, _tuple_segments(rs, t), i)
    return None if segs is None else _split_segments(rs, t, segs)


def tuple_apply_lowering(rs: RootSystem, t: Sequence[LSPath], ops: Sequence[int]) -> Optional[PathTuple]:
    t = tuple(t)
    for i in reversed(ops):
        t = tuple_root_op_f(rs, t, i)
        if t is None:
            return None
    return t


# -- adapted words and compatibility --------------------------------------------

def check_w0_word(rs: RootSystem, word: Sequence[int]) -> Word:
    word = tuple(word)
    if len(word) != len(rs.positive_roots) or rs.index_of_word(word) != rs.index(rs.longest):
        raise NotReducedWordOfW0("%s is not a reduced word of w0"
                                 % ("".join(map(str, word)) or "<empty>"))
    return word


def adapted_generators(rs: RootSystem, word: Sequence[int]) -> AdaptedWordData:
    word = check_w0_word(rs, word)
    prefixes = tuple(rs.element(word[:j]) for j in range(len(word) + 1))
    generators = tuple((prefixes[j], word[j - 1]) for j in range(1, len(word) + 1))
    return AdaptedWordData(word, prefixes, generators)


def _prefix_positions(rs, word):
    return {rs.index_of_word(word[:j]): j for j in range(len(word) + 1)}


def is_compatible_path(rs: RootSystem, path: LSPath, word: Sequence[int]) -> bool:
    """Every minimal representative in the chain is a prefix y_j (y_0 = id included)."""
    word = check_w0_word(rs, word)
    positions = _prefix_positions(rs, word)
    return all(rs.index(c.min_rep) in positions for c in path.chain)


def compatible_tuple_chain(rs: RootSystem, t: Sequence[LSPath],
                           word: Sequence[int]) -> Optional[DefiningChain]:
    """A defining chain with all lifts among the prefixes of ``word``, or None."""
    word = check_w0_word(rs, word)
    prefix_idx = [rs.index_of_word(word[:j]) for j in range(len(word) + 1)]
    bound = len(word)
    flat = []
    for c in tuple_cosets(t):
        members = set(coset_space(rs, c.lam).members[c])
        pos = next((j for j in range(bound, -1, -1) if prefix_idx[j] in members), None)
        if pos is None:
            return None
        flat.append(rs.element_at(prefix_idx[pos]))
        bound = pos
    return DefiningChain(_group(t, flat))


def _as_tuple(obj):
    return (obj,) if isinstance(obj, LSPath) else tuple(obj)


def exists_compatible_word(rs: RootSystem, obj: Union[LSPath, Sequence[LSPath]]) -> Optional[Word]:
    """Lexicographically least reduced word of w0 compatible with a path
    (chain of minimal representatives) or a tuple (some defining chain)."""
    for word in rs.reduced_words(rs.longest):
        if isinstance(obj, LSPath):
            if is_compatible_path(rs, obj, word):
                return word
        elif compatible_tuple_chain(rs, obj, word) is not None:
            return word
    return None


def _word_through(rs, elements):
    """A reduced word of w0 having every element of a right-weak chain as prefix."""
    chain = sorted(set(elements) | {rs.identity, rs.longest}, key=lambda w: w.length)
    for u, v in zip(chain, chain[1:]):
        if not right_weak_leq(rs, u, v):
            return None
    word: Tuple[int, ...] = ()
    for u, v in zip(chain, chain[1:]):
        word += rs.mul(rs.inverse(u), v).word
    return word


def compatible_word_weak_order(rs: RootSystem, obj: Union[LSPath, Sequence[LSPath]]) -> Optional[Word]:
    """Independent route: the chain (or, for tuples, some defining chain) must be
    totally ordered in right weak order."""
    if isinstance(obj, LSPath):
        return _word_through(rs, [c.min_rep for c in obj.chain])
    for chain in all_defining_chains(rs, obj):
        word = _word_through(rs, chain.flat())
        if word is not None:
            return word
    return None


def compatibility_certificate(rs: RootSystem, obj) -> Optional[dict]:
    word = exists_compatible_word(rs, obj)
    if word is None:
        return None
    if isinstance(obj, LSPath):
        chain = [str(c.min_rep) for c in obj.chain]
    else:
        chain = compatible_tuple_chain(rs, obj, word).words()
    return {"word": "".join(map(str, word)), "chain": chain}


# -- projections ------------------------------------------------------------

def project_path(rs: RootSystem, path: LSPath, i: int) -> ProjectedPath:
    varpi = rs.fundamental_weight(i)
    classes = [coset_of(rs, c.min_rep, varpi) for c in path.chain]
    chain = [classes[0]]
    c = []
    for k in range(1, len(classes)):
        if classes[k] != chain[-1]:
            chain.append(classes[k])
            c.append(path.a[k - 1])
    return ProjectedPath(i, tuple(chain), tuple(c))


def lemma10_check(rs: RootSystem, path: LSPath, word: Sequence[int]) -> bool:
    """lam_alpha (c_{j+1} - c_j) is integral for every projection of a compatible path."""
    if not is_compatible_path(rs, path, word):
        raise PreconditionViolated("path %s is not compatible with %s"
                                   % (path, "".join(map(str, word))))
    for i in range(1, rs.rank + 1):
        coeff = path.lam[i - 1]
        if coeff == 0:
            continue
        proj = project_path(rs, path, i)
        points = (Fraction(0),) + proj.c + (Fraction(1),)
        if any((coeff * (y - x)).denominator != 1 for x, y in zip(points, points[1:])):
            return False
    return True


def shape_vectors(rs: RootSystem, max_total: int) -> List[Tuple[Weight, ...]]:
    """All ordered sequences of nonzero dominant weights whose total has
    coordinate sum at most ``max_total``."""
    import itertools

    parts = [lam for lam in itertools.product(range(max_total + 1), repeat=rs.rank)
             if 0 < sum(lam) <= max_total]
    out = []

    def rec(acc, budget):
        if acc:
            out.append(tuple(acc))
        for lam in parts:
            if sum(lam) <= budget:
                acc.append(lam)
                rec(acc, budget - sum(lam))
                acc.pop()

    rec([], max_total)
    return out


def standard_weight_character(rs: RootSystem, shapes) -> Dict[Weight, int]:
    return character_of_weights(tuple_weight(rs, t) for t in standard_tuples(rs, shapes))
