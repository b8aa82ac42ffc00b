"""Type A2 at q = 1: the dual canonical basis, path vectors and transition rows.

Polynomials live in C[a, b, c, d] / (ab - c - d).  Every class has a unique
representative whose monomials satisfy deg_a * deg_b = 0, and those monomials
form the dual canonical basis.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bruhat import coset_of
from .lspath import LSPath, enumerate_B, make_path, path_weight
from .rootsys import RootSystem, Weight, CARTAN_TYPES

Exps = Tuple[int, int, int, int]
VARS = ("a", "b", "c", "d")


class NotA2(ValueError):
    pass


class NonIntegerExponent(ArithmeticError):
    pass


class NotShapeMM(ValueError):
    pass


class UnclassifiablePath(ValueError):
    pass


class NotInImage(ValueError):
    pass


class NotNormalized(ValueError):
    pass


class ExpansionMismatch(AssertionError):
    pass


# -- polynomials ----------------------------------------------------------------

def _add_term(terms, e, coeff):
    v = terms.get(e, 0) + coeff
    if v:
        terms[e] = v
    else:
        terms.pop(e, None)


def _raw_mul(p, q):
    out: Dict[Exps, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            _add_term(out, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
    return out


def _cd_power(j):
    # (c + d)^j
    return {(0, 0, j - k, k): comb(j, k) for k in range(j + 1)}


def normalize(raw: Dict[Exps, int]) -> Dict[Exps, int]:
    """Rewrite ab -> c + d to exhaustion, in one pass per monomial."""
    out: Dict[Exps, int] = {}
    for (ea, eb, ec, ed), coeff in raw.items():
        if not coeff:
            continue
        j = min(ea, eb)
        for (_, _, x, y), k in _cd_power(j).items():
            _add_term(out, (ea - j, eb - j, ec + x, ed + y), coeff * k)
    return out


def normalize_stepwise(raw: Dict[Exps, int], rng: Optional[random.Random] = None) -> Dict[Exps, int]:
    """Apply single ab -> c + d rewrites to randomly chosen monomials until none
    applies.  Used to check that the rewrite system is confluent."""
    rng = rng or random.Random(0)
    terms = {e: c for e, c in raw.items() if c}
    while True:
        reducible = sorted(e for e in terms if e[0] and e[1])
        if not reducible:
            return terms
        e = rng.choice(reducible)
        coeff = terms.pop(e)
        ea, eb, ec, ed = e
        _add_term(terms, (ea - 1, eb - 1, ec + 1, ed), coeff)
        _add_term(terms, (ea - 1, eb - 1, ec, ed + 1), coeff)


class A2Poly:
    """Element of the A2 coordinate ring in dual-canonical normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Exps, int]] = None, normalized: bool = False):
        terms = dict(terms or {})
        self.terms: Dict[Exps, int] = terms if normalized else normalize(terms)

    @classmethod
    def one(cls) -> "A2Poly":
        return cls({(0, 0, 0, 0): 1}, normalized=True)

    @classmethod
    def var(cls, name: str) -> "A2Poly":
        if name == "one":
            return cls.one()
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1}, normalized=True)

    @classmethod
    def monomial(cls, ea=0, eb=0, ec=0, ed=0, coeff=1) -> "A2Poly":
        return cls({(ea, eb, ec, ed): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_term(out, e, c)
        return A2Poly(out, normalized=True)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "A2Poly":
        return A2Poly({e: c * k for e, c in self.terms.items() if c * k}, normalized=True)

    def __mul__(self, other):
        return A2Poly(_raw_mul(self.terms, other.terms))

    def __pow__(self, k: int):
        out = A2Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, A2Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> List[Tuple[Exps, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(VARS, e):
                if k:
                    factors.append(name if k == 1 else "%s^%d" % (name, k))
            mono = " ".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d %s" % (mag, mono)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "A2Poly(%s)" % self

    def to_dict(self) -> dict:
        return {"terms": [{"e": list(e), "c": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_dict(cls, data: dict) -> "A2Poly":
        return cls({tuple(t["e"]): t["c"] for t in data["terms"]})


MINOR_WEIGHT = {"a": (1, 0), "b": (0, 1), "c": (1, 1), "d": (1, 1)}


def poly_weights(p: A2Poly) -> List[Tuple[int, int]]:
    """Root-coordinate degree of each monomial (a: alpha1, b: alpha2, c, d: alpha1+alpha2)."""
    out = []
    for ea, eb, ec, ed in p.terms:
        out.append((ea + ec + ed, eb + ec + ed))
    return sorted(set(out))


# -- matrix model oracle --------------------------------------------------------

def matrix_model_eval(p: A2Poly):
    """Substitute the matrix coefficients of a lower unitriangular 3x3 matrix:
    a = u21, b = u32, c = u31, d = u21 u32 - u31."""
    import sympy

    u21, u31, u32 = sympy.symbols("u21 u31 u32")
    images = (u21, u32, u31, u21 * u32 - u31)
    total = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Integer(c)
        for img, k in zip(images, e):
            term *= img ** k
        total += term
    return sympy.expand(total)


def kl0_monomials(degree: int) -> List[Exps]:
    """All normal-form exponent vectors of total degree ``degree``."""
    out = []
    for e in itertools.product(range(degree + 1), repeat=4):
        if sum(e) == degree and e[0] * e[1] == 0:
            out.append(e)
    return sorted(out)


# -- minors and paths -----------------------------------------------------------

MINOR_TABLE = {
    1: {(): "one", (1,): "a", (2, 1): "c"},
    2: {(): "one", (2,): "b", (1, 2): "d"},
}


def require_a2(rs: RootSystem) -> None:
    if [list(r) for r in rs.cartan] != [list(r) for r in CARTAN_TYPES["A2"]]:
        raise NotA2("this operation needs the A2 root system")


def minor_of(rs: RootSystem, tau, i: int) -> str:
    """The minor b_tau^{varpi_i}, looked up via tau mod W_{varpi_i}."""
    require_a2(rs)
    c = coset_of(rs, tau, rs.fundamental_weight(i))
    return MINOR_TABLE[i][c.min_rep.word]


def choose_ell(path: LSPath) -> int:
    """Smallest even ell with ell * a_i integral."""
    den = 1
    for x in path.a:
        den = lcm(den, x.denominator)
    return den if den % 2 == 0 else 2 * den


def _durations(path: LSPath) -> List[Fraction]:
    t = path.times()
    return [y - x for x, y in zip(t, t[1:])]


def monomial_m_pi(rs: RootSystem, path: LSPath, ell: Optional[int] = None) -> A2Poly:
    require_a2(rs)
    ell = ell or choose_ell(path)
    exps = [0, 0, 0, 0]
    for c, x in zip(path.chain, _durations(path)):
        for i in (1, 2):
            k = path.lam[i - 1] * ell * x
            if k.denominator != 1:
                raise NonIntegerExponent("exponent %s for %s" % (k, path))
            name = minor_of(rs, c.min_rep, i)
            if name != "one":
                exps[VARS.index(name)] += int(k)
    return A2Poly.monomial(*exps)


def fr_splitting(p: A2Poly, lbar: int) -> A2Poly:
    """Keep monomials whose exponents are all divisible by lbar, divided by it."""
    out = {}
    for e, c in p.terms.items():
        if all(k % lbar == 0 for k in e):
            out[tuple(k // lbar for k in e)] = c
    return A2Poly(out, normalized=True)


def path_vector(rs: RootSystem, path: LSPath) -> A2Poly:
    ell = choose_ell(path)
    # d = 1 in A2, so lbar = ell
    return fr_splitting(monomial_m_pi(rs, path, ell), ell)


def standard_monomial_vector(rs: RootSystem, paths: Sequence[LSPath]) -> A2Poly:
    out = A2Poly.one()
    for p in paths:
        out = out * path_vector(rs, p)
    return out


# -- the basis of V(m varpi_1 + m varpi_2)* ------------------------------------------

MAX_CHAINS = {
    "1,1": ((1, 2, 1), (1, 2), (1,), ()),
    "1,2": ((1, 2, 1), (2, 1), (2,), ()),
    "2,1": ((1, 2, 1), (2, 1), (1,), ()),
    "2,2": ((1, 2, 1), (1, 2), (2,), ()),
}
GROUP_ORDER = ("1,1", "1,2", "2,1", "2,2")


@dataclass(frozen=True)
class PaddedPath:
    chain_name: str
    a: Tuple[Fraction, Fraction, Fraction]

    @property
    def x(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        a1, a2, a3 = self.a
        return (a1, a2 - a1, a3 - a2, 1 - a3)


def padded_forms(path: LSPath) -> List[PaddedPath]:
    """Every way to read the path on one of the four maximal chains, with
    zero-length segments filled in."""
    words = path.words
    starts = [Fraction(0)] + list(path.a)
    out = []
    for name in GROUP_ORDER:
        full = MAX_CHAINS[name]
        if not all(w in full for w in words):
            continue
        pos = [full.index(w) for w in words]
        a = []
        for k in (1, 2, 3):
            j = next((j for j, p in enumerate(pos) if p >= k), None)
            a.append(Fraction(1) if j is None else starts[j])
        out.append(PaddedPath(name, tuple(a)))
    return out


def _in_group(padded: PaddedPath, m: int) -> bool:
    a1, a2, a3 = padded.a
    if padded.chain_name in ("1,1", "1,2"):
        return all((m * x).denominator == 1 for x in padded.a)
    return all(x.denominator == 1 for x in (m * a1, 2 * m * a2, m * a3))


def _int(x: Fraction) -> int:
    if x.denominator != 1 or x < 0:
        raise NonIntegerExponent("exponent %s" % x)
    return int(x)


def _closed_form(padded: PaddedPath, m: int) -> A2Poly:
    x1, x2, x3, _ = padded.x
    name = padded.chain_name
    if name == "1,1":
        return A2Poly.monomial(ea=_int(m * (x2 + x3)), ec=_int(m * x1), ed=_int(m * (x1 + x2)))
    if name == "1,2":
        return A2Poly.monomial(eb=_int(m * (x2 + x3)), ec=_int(m * (x1 + x2)), ed=_int(m * x1))
    if name == "2,1":
        if x2 >= x3:
            return A2Poly.monomial(eb=_int(m * (x2 - x3)), ec=_int(m * (x1 + x2 + x3)),
                                   ed=_int(m * x1))
        return A2Poly.monomial(ea=_int(m * (x3 - x2)), ec=_int(m * (x1 + 2 * x2)), ed=_int(m * x1))
    if x2 >= x3:
        return A2Poly.monomial(ea=_int(m * (x2 - x3)), ec=_int(m * x1),
                               ed=_int(m * (x1 + x2 + x3)))
    return A2Poly.monomial(eb=_int(m * (x3 - x2)), ec=_int(m * x1), ed=_int(m * (x1 + 2 * x2)))


def classify(path: LSPath, m: int) -> List[PaddedPath]:
    """Padded forms whose group conditions hold, group 1 first."""
    if path.lam != (m, m):
        raise NotShapeMM("path shape %s is not (%d, %d)" % (path.lam, m, m))
    found = [p for p in padded_forms(path) if _in_group(p, m)]
    if not found:
        raise UnclassifiablePath(str(path))
    return found


def dual_basis_element(path: LSPath, m: int) -> A2Poly:
    """The dual canonical basis monomial b_pi attached to pi in B(m varpi_1 + m varpi_2)."""
    forms = classify(path, m)
    results = {_closed_form(p, m) for p in forms}
    if len(results) != 1:
        raise AssertionError("closed forms disagree on %s: %s" % (path, results))
    return results.pop()


def _path_from_padded(rs, m, name, a):
    full = MAX_CHAINS[name]
    bounds = [Fraction(0)] + list(a) + [Fraction(1)]
    words, turns = [], []
    for k, w in enumerate(full):
        if bounds[k + 1] > bounds[k]:
            if words:
                turns.append(bounds[k])
            words.append("".join(map(str, w)))
    return make_path(rs, (m, m), words, turns)


def monomial_to_path(rs: RootSystem, mono: Exps, m: int) -> LSPath:
    """Inverse of dual_basis_element on basis monomials."""
    require_a2(rs)
    u_a, u_b, v, w = mono
    if u_a and u_b:
        raise NotInImage("monomial is not in normal form")
    M = Fraction(m)
    cands = []
    if not u_b:
        u = u_a
        if v <= w <= u + v <= m:
            cands.append(("1,1", (v / M, w / M, (u + v) / M)))
        if 2 * w <= v + w <= 2 * (u + v) <= 2 * m:
            cands.append(("2,1", (w / M, (v + w) / (2 * M), (u + v) / M)))
        if 2 * v <= u + v + w <= 2 * w <= 2 * m:
            cands.append(("2,2", (v / M, (u + v + w) / (2 * M), w / M)))
    if not u_a:
        u = u_b
        if w <= v <= u + w <= m:
            cands.append(("1,2", (w / M, v / M, (u + w) / M)))
        if 2 * w <= u + v + w <= 2 * v <= 2 * m:
            cands.append(("2,1", (w / M, (u + v + w) / (2 * M), v / M)))
        if 2 * v <= v + w <= 2 * (u + w) <= 2 * m:
            cands.append(("2,2", (v / M, (v + w) / (2 * M), (u + w) / M)))
    paths = {_path_from_padded(rs, m, name, a) for name, a in cands}
    if not paths:
        raise NotInImage("%s is not a basis monomial for m = %d" % (A2Poly.monomial(*mono), m))
    if len(paths) != 1:
        raise AssertionError("rules disagree on %s: %s" % (mono, [str(p) for p in paths]))
    return paths.pop()


def basis_monomials(m: int) -> List[Exps]:
    """Normal-form monomials satisfying one of the rule systems, sorted."""
    out = []
    for e in itertools.product(range(m + 1), repeat=4):
        if e[0] and e[1]:
            continue
        try:
            monomial_to_path(_A2(), e, m)
        except NotInImage:
            continue
        out.append(e)
    return out


_A2_CACHE: List[RootSystem] = []


def _A2() -> RootSystem:
    if not _A2_CACHE:
        _A2_CACHE.append(RootSystem.from_name("A2"))
    return _A2_CACHE[0]


# -- transition rows ----------------------------------------------------------

@dataclass(frozen=True)
class TransitionRow:
    source: LSPath
    entries: Tuple[Tuple[LSPath, int], ...]

    def to_dict(self) -> dict:
        return {"source": self.source.to_dict(),
                "entries": [{"target": p.to_dict(), "c": c} for p, c in self.entries]}


def _sorted_entries(entries):
    return tuple(sorted(entries, key=lambda pc: pc[0].sort_key()))


def transition_row(rs: RootSystem, path: LSPath, m: int) -> TransitionRow:
    """Expand p_pi in basis monomials and index each monomial by its path."""
    entries = []
    for e, c in path_vector(rs, path).terms.items():
        try:
            target = monomial_to_path(rs, e, m)
        except NotInImage as exc:
            raise ExpansionMismatch("p_pi for %s has a non-basis monomial: %s" % (path, exc))
        entries.append((target, c))
    return TransitionRow(path, _sorted_entries(entries))


def binomial_row(rs: RootSystem, path: LSPath, m: int) -> TransitionRow:
    """The binomial closed form for the same row."""
    forms = classify(path, m)
    padded = forms[0]
    if padded.chain_name in ("1,1", "1,2"):
        return TransitionRow(path, ((path, 1),))
    ell = choose_ell(path)
    _, x2, x3, _ = padded.x
    t = min(m * x2, m * x3)
    a1, a2, a3 = padded.a
    entries = []
    for j in range(int(t) + 1):
        shifted = (a1 + Fraction(j, m), a2, a3 - Fraction(j, m))
        target = _path_from_padded(rs, m, padded.chain_name, shifted)
        entries.append((target, comb(_int(t * ell), j * ell)))
    return TransitionRow(path, _sorted_entries(entries))


def transition_matrix(rs: RootSystem, m: int) -> List[TransitionRow]:
    require_a2(rs)
    return [transition_row(rs, p, m) for p in enumerate_B(rs, (m, m))]


def format_transition_table(rows: Iterable[TransitionRow], m: int) -> str:
    lines = []
    for row in rows:
        src = str(row.source)
        rhs = " + ".join(("%d " % c if c != 1 else "") + "b[%s]" % p for p, c in row.entries)
        lines.append("p[%s] = %s" % (src, rhs))
    width = max((line.index("=") for line in lines), default=0)
    return "\n".join(line.replace(" = ", " " * (width - line.index("=")) + " = ", 1)
                     for line in lines)


# -- strings in B(infinity) ---------------------------------------------------

def swap_string(l: int, m: int, n: int) -> Tuple[int, int, int]:
    """(r, s, t) with f1^l f2^m f1^n = f2^r f1^s f2^t."""
    return max(n, m - l), l + n, min(m - n, l)


def binfty_string_element(l: int, m: int, n: int) -> A2Poly:
    """Dual canonical monomial for f1^l f2^m f1^n u_infinity, m >= n."""
    if not (m >= n >= 0 and l >= 0):
        raise NotNormalized("need m >= n >= 0, l >= 0; got (%d, %d, %d)" % (l, m, n))
    if l >= m - n:
        return A2Poly.monomial(ea=l + n - m, ec=n, ed=m - n)
    r, s, t = swap_string(l, m, n)
    return A2Poly.monomial(eb=r + t - s, ec=s - t, ed=t)


def _swap_ab_cd(p: A2Poly) -> A2Poly:
    return A2Poly({(eb, ea, ed, ec): c for (ea, eb, ec, ed), c in p.terms.items()},
                  normalized=True)


def binfty_string_element_dir(first: int, x: int, y: int, z: int) -> A2Poly:
    """Same, for the string f_i^x f_j^y f_i^z with i = ``first``."""
    if first == 1:
        return binfty_string_element(x, y, z)
    return _swap_ab_cd(binfty_string_element(x, y, z))


def example11_standard_monomial(rs: RootSystem, l: int, m: int, n: int):
    """Shape vector, standard tuple and product for f1^l f2^m f1^n u_infinity."""
    require_a2(rs)
    if not (l >= m - n >= 0 and n >= 0):
        raise NotNormalized("need l >= m - n >= 0; got (%d, %d, %d)" % (l, m, n))
    parts = [((n, 0), "21"), ((0, m - n), "12"), ((l + n - m, 0), "1")]
    shapes, paths = [], []
    for lam, word in parts:
        if any(lam):
            shapes.append(lam)
            paths.append(make_path(rs, lam, [word]))
    paths = tuple(paths)
    return tuple(shapes), paths, standard_monomial_vector(rs, paths)


def weight_of_path_vector_expected(rs: RootSystem, path: LSPath) -> Tuple[int, int]:
    """lam - weight(pi) in root coordinates."""
    diff = [x - y for x, y in zip(path.lam, path_weight(rs, path))]
    coords = rs.weight_to_root_coords(diff)
    return tuple(int(c) for c in coords)
