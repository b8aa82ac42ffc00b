"""Finite-type root systems, Weyl group arithmetic and character oracles.

Conventions
-----------
A Cartan matrix ``A`` is read row-wise: row ``i`` holds the simple root
``alpha_i`` in the basis of fundamental weights, so ``a_ij = <alpha_i, alpha_j^vee>``.
Weights are integer tuples in fundamental-weight coordinates, roots are integer
tuples in simple-root coordinates, and simple reflections are numbered from 1.

The Weyl group is generated eagerly when a :class:`RootSystem` is built.  Each
element is stored once, under its shortlex-minimal reduced word, and identified
by its action on the fundamental weights.
"""

from __future__ import annotations

import math
import threading
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

Weight = Tuple[int, ...]
Root = Tuple[int, ...]
Word = Tuple[int, ...]

DEFAULT_CAP = 50_000


class MalformedCartan(ValueError):
    pass


class NotFiniteType(ValueError):
    pass


class NotDominant(ValueError):
    pass


def _type_a(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
            for i in range(n)]


def _type_b(n):
    m = _type_a(n)
    m[n - 2][n - 1] = -2
    return m


def _type_c(n):
    m = _type_a(n)
    m[n - 1][n - 2] = -2
    return m


def _type_d4():
    m = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    return m


CARTAN_TYPES = {
    "A1": [[2]],
    "A2": _type_a(2),
    "A3": _type_a(3),
    "A4": _type_a(4),
    "B2": _type_b(2),
    "B3": _type_b(3),
    "C3": _type_c(3),
    "D4": _type_d4(),
    "G2": [[2, -1], [-3, 2]],
}


@dataclass(frozen=True)
class WeylElement:
    """An element of W, held by its canonical (shortlex-minimal) reduced word.

    Only :class:`RootSystem` should construct these; equality compares the
    canonical words.
    """

    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return "".join(str(i) for i in self.word)

    def __repr__(self):
        return "WeylElement(%r)" % (str(self) or "id")


def parse_word(text: str) -> Word:
    """Parse a digit string such as ``"121"``; the empty string is the identity."""
    text = text.strip()
    if text in ("", "id", "e"):
        return ()
    if not text.isdigit():
        raise ValueError("bad Weyl word %r" % text)
    return tuple(int(ch) for ch in text)


def parse_weight(text: str) -> Weight:
    return tuple(int(x) for x in text.split(",")) if text.strip() else ()


def format_weight(mu: Sequence[int]) -> str:
    return ",".join(str(x) for x in mu)


def _validate_cartan(cartan):
    n = len(cartan)
    if n == 0:
        raise MalformedCartan("empty Cartan matrix")
    for row in cartan:
        if len(row) != n:
            raise MalformedCartan("Cartan matrix must be square")
        for x in row:
            if not isinstance(x, int):
                raise MalformedCartan("Cartan entries must be integers")
    for i in range(n):
        if cartan[i][i] != 2:
            raise MalformedCartan("diagonal entry a_%d%d != 2" % (i + 1, i + 1))
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise MalformedCartan("positive off-diagonal entry")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise MalformedCartan("a_ij = 0 but a_ji != 0")


def _symmetrizer(cartan):
    # minimal positive integers with a_ij d_j = a_ji d_i, per connected component
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                value = d[i] * Fraction(cartan[j][i], cartan[i][j])
                if d[j] is None:
                    d[j] = value
                    component.append(j)
                    queue.append(j)
                elif d[j] != value:
                    raise MalformedCartan("Cartan matrix is not symmetrizable")
        scale = math.lcm(*(d[k].denominator for k in component))
        ints = [int(d[k] * scale) for k in component]
        g = math.gcd(*ints)
        for k, v in zip(component, ints):
            d[k] = Fraction(v // g)
    return tuple(int(x) for x in d)


def _invert(matrix):
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotFiniteType("singular Cartan matrix is not of finite type")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Root datum of a finite-type Cartan matrix together with its Weyl group.

    Instances are immutable after construction apart from write-once caches
    used by the other modules; those are guarded by a lock.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], cap: int = DEFAULT_CAP,
                 name: str | None = None):
        cartan = [list(row) for row in cartan]
        _validate_cartan(cartan)
        self.name = name
        self.cartan = tuple(tuple(row) for row in cartan)
        self.rank = n = len(cartan)
        self.symmetrizers = _symmetrizer(cartan)
        self.d = math.lcm(*self.symmetrizers)
        self.cap = cap
        self._cartan_inv = _invert(cartan)
        self._lock = threading.Lock()
        self._memo: dict = {}
        self._generate_weyl_group(cap)
        self._generate_roots()
        self.rho = (1,) * n

    @classmethod
    def from_name(cls, name: str, cap: int = DEFAULT_CAP) -> "RootSystem":
        key = name.strip().upper()
        if key not in CARTAN_TYPES:
            raise MalformedCartan("unknown Cartan type %r (known: %s)"
                                  % (name, ", ".join(CARTAN_TYPES)))
        return cls(CARTAN_TYPES[key], cap=cap, name=key)

    def __repr__(self):
        return "RootSystem(%s)" % (self.name or list(map(list, self.cartan)))

    # -- Weyl group -----------------------------------------------------

    def _generate_weyl_group(self, cap):
        n = self.rank
        A = self.cartan
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        words: List[Word] = [()]
        keys = [identity]
        index = {identity: 0}
        level = [0]
        while level:
            nxt = []
            for idx in level:
                images = keys[idx]
                for i in range(n):
                    # (w s_i)(varpi_j) = w(varpi_j) - delta_ij w(alpha_i)
                    w_alpha = tuple(sum(A[i][k] * images[k][c] for k in range(n))
                                    for c in range(n))
                    new = list(images)
                    new[i] = tuple(x - y for x, y in zip(images[i], w_alpha))
                    new = tuple(new)
                    if new not in index:
                        index[new] = len(words)
                        words.append(words[idx] + (i + 1,))
                        keys.append(new)
                        nxt.append(index[new])
                        if len(words) > cap:
                            raise NotFiniteType(
                                "Weyl group exceeds cap of %d elements" % cap)
            nxt.sort(key=lambda k: words[k])
            level = nxt
        self._words = words
        self._keys = keys
        self._key_index = index
        self._word_index = {w: k for k, w in enumerate(words)}
        self._elements = [WeylElement(w) for w in words]
        self.weyl_order = len(words)
        size = len(words)
        self._right = [[0] * size for _ in range(n)]
        self._left = [[0] * size for _ in range(n)]
        for idx, images in enumerate(keys):
            for i in range(n):
                w_alpha = tuple(sum(A[i][k] * images[k][c] for k in range(n))
                                for c in range(n))
                new = list(images)
                new[i] = tuple(x - y for x, y in zip(images[i], w_alpha))
                self._right[i][idx] = index[tuple(new)]
                left = tuple(self.reflect(i + 1, img) for img in images)
                self._left[i][idx] = index[left]
        self._longest = max(range(size), key=lambda k: len(words[k]))

    def index(self, w: WeylElement) -> int:
        return self._word_index[w.word]

    def element_at(self, idx: int) -> WeylElement:
        return self._elements[idx]

    def elements(self) -> List[WeylElement]:
        return list(self._elements)

    @property
    def identity(self) -> WeylElement:
        return self._elements[0]

    @property
    def longest(self) -> WeylElement:
        return self._elements[self._longest]

    def index_of_word(self, word: Iterable[int]) -> int:
        idx = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError("simple reflection index %d out of range" % i)
            idx = self._right[i - 1][idx]
        return idx

    def element(self, word: Iterable[int] | str = ()) -> WeylElement:
        """The element s_{i_1}...s_{i_k}, returned in canonical form."""
        if isinstance(word, str):
            word = parse_word(word)
        return self._elements[self.index_of_word(word)]

    def is_reduced(self, word: Sequence[int]) -> bool:
        return len(self._words[self.index_of_word(word)]) == len(word)

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        idx = self.index(u)
        for i in v.word:
            idx = self._right[i - 1][idx]
        return self._elements[idx]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(reversed(w.word))

    def right_mul_index(self, idx: int, i: int) -> int:
        return self._right[i - 1][idx]

    def length_of_index(self, idx: int) -> int:
        return len(self._words[idx])

    def right_descents(self, w: WeylElement) -> List[int]:
        idx = self.index(w)
        return [i for i in range(1, self.rank + 1)
                if len(self._words[self._right[i - 1][idx]]) < len(w.word)]

    def reduced_words(self, w: WeylElement) -> List[Word]:
        """All reduced words of ``w``, sorted lexicographically."""
        key = ("reduced_words", w.word)
        cached = self._memo.get(key)
        if cached is not None:
            return list(cached)
        found: Dict[int, List[Word]] = {0: [()]}

        def words_of(idx):
            if idx in found:
                return found[idx]
            out = []
            ln = len(self._words[idx])
            for i in range(self.rank):
                prev = self._right[i][idx]
                if len(self._words[prev]) < ln:
                    out.extend(word + (i + 1,) for word in words_of(prev))
            found[idx] = out
            return out

        result = tuple(sorted(words_of(self.index(w))))
        self._remember(key, result)
        return list(result)

    def _remember(self, key, value):
        with self._lock:
            return self._memo.setdefault(key, value)

    def memo(self, key, factory):
        """Write-once cache shared by the modules built on this root system."""
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = factory()
        return self._remember(key, value)

    # -- weights and roots ------------------------------------------------

    def check_weight(self, mu: Sequence[int]) -> Weight:
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.rank:
            raise ValueError("weight %r has wrong rank (expected %d)" % (mu, self.rank))
        return mu

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(x >= 0 for x in mu)

    def require_dominant(self, mu: Sequence[int]) -> Weight:
        mu = self.check_weight(mu)
        if not self.is_dominant(mu):
            raise NotDominant("weight %s is not dominant" % format_weight(mu))
        return mu

    def simple_root_weight(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (row i of the Cartan matrix)."""
        return self.cartan[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(j == i - 1) for j in range(self.rank))

    def reflect(self, i: int, mu: Sequence[int]) -> Weight:
        """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
        k = mu[i - 1]
        if k == 0:
            return tuple(mu)
        row = self.cartan[i - 1]
        return tuple(x - k * a for x, a in zip(mu, row))

    def act(self, w: WeylElement, mu: Sequence[int]) -> Weight:
        mu = tuple(mu)
        for i in reversed(w.word):
            mu = self.reflect(i, mu)
        return mu

    def root_to_weight(self, beta: Sequence[int]) -> Weight:
        A = self.cartan
        return tuple(sum(beta[i] * A[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def weight_to_root_coords(self, mu: Sequence[int]) -> Tuple[Fraction, ...]:
        inv = self._cartan_inv
        return tuple(sum(mu[j] * inv[j][i] for j in range(self.rank))
                     for i in range(self.rank))

    def _generate_roots(self):
        n = self.rank
        A = self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                k = sum(beta[j] * A[j][i] for j in range(n))
                image = tuple(b - k * int(j == i) for j, b in enumerate(beta))
                if image not in roots:
                    roots.add(image)
                    queue.append(image)
        positive = [r for r in roots if all(x >= 0 for x in r)]
        if 2 * len(positive) != len(roots):
            raise MalformedCartan("root system is not closed under sign")
        self.positive_roots = tuple(sorted(positive, key=lambda r: (sum(r), r)))
        self._coroots = {beta: self._compute_coroot(beta) for beta in self.positive_roots}
        longest_length = len(self._words[self._longest])
        if longest_length != len(self.positive_roots):
            raise MalformedCartan("length of w0 differs from number of positive roots")

    def inner(self, beta: Sequence, gamma: Sequence) -> Fraction:
        """Invariant form on the root lattice, normalised by (alpha_i, alpha_i) = 2 d_i."""
        A, d = self.cartan, self.symmetrizers
        n = self.rank
        return sum(Fraction(beta[i]) * gamma[j] * A[i][j] * d[j]
                   for i in range(n) for j in range(n))

    def _compute_coroot(self, beta):
        half_norm = self.inner(beta, beta) / 2
        coeffs = [Fraction(beta[i] * self.symmetrizers[i]) / half_norm
                  for i in range(self.rank)]
        if any(c.denominator != 1 for c in coeffs):
            raise MalformedCartan("non-integral coroot for %r" % (beta,))
        return tuple(int(c) for c in coeffs)

    def coroot(self, beta: Root) -> Tuple[int, ...]:
        """beta^vee in the basis of simple coroots."""
        beta = tuple(beta)
        if beta in self._coroots:
            return self._coroots[beta]
        neg = tuple(-x for x in beta)
        if neg in self._coroots:
            return tuple(-x for x in self._coroots[neg])
        raise ValueError("%r is not a root" % (beta,))

    def pairing(self, mu: Sequence[int], beta: Root) -> int:
        """<mu, beta^vee> for a weight mu (fundamental coordinates) and a root beta."""
        return sum(m * c for m, c in zip(mu, self.coroot(beta)))

    def reflect_by_root(self, beta: Root, mu: Sequence[int]) -> Weight:
        """s_beta(mu) = mu - <mu, beta^vee> beta."""
        k = self.pairing(mu, beta)
        if k == 0:
            return tuple(mu)
        bw = self.root_to_weight(beta)
        return tuple(x - k * y for x, y in zip(mu, bw))

    def weight_inner(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        # (mu, alpha_j) = d_j <mu, alpha_j^vee>
        c = self.weight_to_root_coords(nu)
        return sum(mu[j] * self.symmetrizers[j] * c[j] for j in range(self.rank))

    def dominant_conjugate(self, mu: Sequence[int]) -> Weight:
        mu = tuple(mu)
        while True:
            for i in range(self.rank):
                if mu[i] < 0:
                    mu = self.reflect(i + 1, mu)
                    break
            else:
                return mu

    def orbit(self, mu: Sequence[int]) -> List[Weight]:
        mu = tuple(mu)
        seen = {mu}
        queue = deque([mu])
        while queue:
            nu = queue.popleft()
            for i in range(1, self.rank + 1):
                image = self.reflect(i, nu)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return sorted(seen)

    # -- characters -----------------------------------------------------

    def weyl_dimension(self, lam: Sequence[int]) -> int:
        lam = self.require_dominant(lam)
        shifted = tuple(x + 1 for x in lam)
        num = den = 1
        for beta in self.positive_roots:
            num *= self.pairing(shifted, beta)
            den *= self.pairing(self.rho, beta)
        assert num % den == 0
        return num // den

    def dominant_weights_below(self, lam: Sequence[int]) -> List[Weight]:
        """Dominant weights mu with lam - mu a nonnegative sum of simple roots."""
        lam = self.require_dominant(lam)
        bound = [int(math.floor(c)) for c in self.weight_to_root_coords(lam)]
        out = []

        def rec(i, mu):
            if i == self.rank:
                if self.is_dominant(mu):
                    out.append(mu)
                return
            row = self.cartan[i]
            for k in range(bound[i] + 1):
                rec(i + 1, tuple(x - k * a for x, a in zip(mu, row)))

        rec(0, lam)
        return sorted(out)

    def freudenthal_character(self, lam: Sequence[int]) -> Dict[Weight, int]:
        """Weight multiplicities of V(lam) by Freudenthal's recursion."""
        lam = self.require_dominant(lam)
        dominant = self.dominant_weights_below(lam)
        lam_coords = self.weight_to_root_coords(lam)
        height = {mu: sum(l - c for l, c in zip(lam_coords, self.weight_to_root_coords(mu)))
                  for mu in dominant}
        dominant.sort(key=lambda mu: height[mu])
        lam_rho = tuple(x + 1 for x in lam)
        norm_top = self.weight_inner(lam_rho, lam_rho)
        mult: Dict[Weight, int] = {}
        root_weights = [self.root_to_weight(b) for b in self.positive_roots]

        def below_lam(nu):
            diff = [l - c for l, c in zip(lam_coords, self.weight_to_root_coords(nu))]
            return all(x >= 0 and x.denominator == 1 for x in diff)

        for mu in dominant:
            if mu == lam:
                mult[mu] = 1
                continue
            total = Fraction(0)
            for bw in root_weights:
                k = 1
                while True:
                    nu = tuple(x + k * y for x, y in zip(mu, bw))
                    if not below_lam(nu):
                        break
                    m = mult.get(self.dominant_conjugate(nu), 0)
                    if m:
                        total += m * self.weight_inner(nu, bw)
                    k += 1
            mu_rho = tuple(x + 1 for x in mu)
            denom = norm_top - self.weight_inner(mu_rho, mu_rho)
            value = 2 * total / denom
            if value.denominator != 1:
                raise ArithmeticError("non-integral multiplicity at %r" % (mu,))
            if value:
                mult[mu] = int(value)
        character: Dict[Weight, int] = {}
        for mu, m in mult.items():
            for nu in self.orbit(mu):
                character[nu] = m
        return dict(sorted(character.items()))

    def demazure_operator(self, i: int, f: Dict[Weight, int]) -> Dict[Weight, int]:
        """D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), by string summation."""
        alpha = self.cartan[i - 1]
        out: Dict[Weight, int] = {}
        for mu, c in f.items():
            n = mu[i - 1]
            if n >= 0:
                steps, sign = range(0, -n - 1, -1), 1
            elif n == -1:
                continue
            else:
                steps, sign = range(1, -n), -1
            for k in steps:
                nu = tuple(x + k * a for x, a in zip(mu, alpha))
                out[nu] = out.get(nu, 0) + sign * c
        return {mu: c for mu, c in out.items() if c}

    def demazure_character(self, lam: Sequence[int], tau: WeylElement) -> Dict[Weight, int]:
        lam = self.require_dominant(lam)
        f = {lam: 1}
        for i in reversed(tau.word):
            f = self.demazure_operator(i, f)
        return dict(sorted(f.items()))


def character_of_weights(weights: Iterable[Sequence[int]]) -> Dict[Weight, int]:
    out: Dict[Weight, int] = {}
    for mu in weights:
        mu = tuple(mu)
        out[mu] = out.get(mu, 0) + 1
    return dict(sorted(out.items()))
