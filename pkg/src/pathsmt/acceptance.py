"""The acceptance checks, shared by the test suite and ``pathsmt sweep``.

Each check returns ``(ok, detail)``.  Everything is exact integer or rational
arithmetic, so the tolerance on every comparison is zero.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from typing import Callable, List, Tuple

from . import a2cb, smt
from .bruhat import (
    bruhat_leq, bruhat_leq_allwords, bruhat_leq_index, coset_space, max_lift_below_index,
)
from .lspath import (
    apply_lowering, demazure_subset, enumerate_B, make_path, path_character, path_weight,
    straight_path, string,
)
from .rootsys import RootSystem

# runtime budgets in seconds
CHARACTER_BUDGET = 60.0
TRANSITION_BUDGET = 30.0

Result = Tuple[bool, str]


def dominant_weights(rank: int, max_sum: int):
    for lam in itertools.product(range(max_sum + 1), repeat=rank):
        if sum(lam) <= max_sum:
            yield lam


SWEEP_TYPES = ("A1", "A2", "A3", "B2", "G2")


def check_character_identity() -> Result:
    start = time.perf_counter()
    count = 0
    for name in SWEEP_TYPES:
        rs = RootSystem.from_name(name)
        for lam in dominant_weights(rs.rank, 4):
            if path_character(rs, enumerate_B(rs, lam)) != rs.freudenthal_character(lam):
                return False, "%s %s: character mismatch" % (name, lam)
            count += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < CHARACTER_BUDGET
    return ok, "%d weights, %.1fs (budget %.0fs)" % (count, elapsed, CHARACTER_BUDGET)


def check_demazure_identity() -> Result:
    count = 0
    for name in SWEEP_TYPES:
        rs = RootSystem.from_name(name)
        for lam in dominant_weights(rs.rank, 4):
            for tau in rs.elements():
                got = path_character(rs, demazure_subset(rs, lam, tau))
                if got != rs.demazure_character(lam, tau):
                    return False, "%s %s tau=%s: Demazure mismatch" % (name, lam, tau)
                count += 1
    return True, "%d (weight, tau) pairs" % count


SMT_SWEEP = (("A2", 4), ("B2", 4), ("A3", 3))


def check_smt_counting() -> Result:
    count = 0
    for name, limit in SMT_SWEEP:
        rs = RootSystem.from_name(name)
        for shapes in smt.shape_vectors(rs, limit):
            total = tuple(map(sum, zip(*shapes)))
            if smt.count_standard(rs, shapes) != rs.weyl_dimension(total):
                return False, "%s %s: count differs from dimension" % (name, shapes)
            count += 1
    return True, "%d shape vectors" % count


def _zero_weight_paths(rs):
    pi1 = make_path(rs, (2, 2), ["21", "1"], ["1/2"])
    pi2 = make_path(rs, (2, 2), ["121", ""], ["1/2"])
    pi3 = make_path(rs, (2, 2), ["12", "2"], ["1/2"])
    return pi1, pi2, pi3


def check_zero_weight_paths() -> Result:
    rs = RootSystem.from_name("A2")
    pi1, pi2, pi3 = _zero_weight_paths(rs)
    zero = [p for p in enumerate_B(rs, (2, 2)) if path_weight(rs, p) == (0, 0)]
    if set(zero) != {pi1, pi2, pi3} or len(zero) != 3:
        return False, "zero-weight paths: %s" % [str(p) for p in zero]
    P = a2cb.A2Poly.monomial
    expected_p = {pi1: P(ec=2) + P(ec=1, ed=1), pi2: P(ec=1, ed=1), pi3: P(ec=1, ed=1) + P(ed=2)}
    expected_b = {pi1: P(ec=2), pi2: P(ec=1, ed=1), pi3: P(ed=2)}
    for p in (pi1, pi2, pi3):
        if a2cb.path_vector(rs, p) != expected_p[p]:
            return False, "p_pi mismatch for %s" % p
        if a2cb.dual_basis_element(p, 2) != expected_b[p]:
            return False, "b_pi mismatch for %s" % p
    expected_rows = {pi1: {pi1: 1, pi2: 1}, pi2: {pi2: 1}, pi3: {pi3: 1, pi2: 1}}
    for p in (pi1, pi2, pi3):
        if dict(a2cb.transition_row(rs, p, 2).entries) != expected_rows[p]:
            return False, "transition row mismatch for %s" % p
    verdicts = [smt.exists_compatible_word(rs, p) is not None for p in (pi1, pi2, pi3)]
    if verdicts != [False, True, False]:
        return False, "compatibility verdicts %s" % verdicts
    return True, "paths, p_pi, b_pi, transitions and compatibility all match"


def check_transition_formula() -> Result:
    rs = RootSystem.from_name("A2")
    start = time.perf_counter()
    rows = 0
    for m in (1, 2, 3, 4):
        for p in enumerate_B(rs, (m, m)):
            if a2cb.transition_row(rs, p, m) != a2cb.binomial_row(rs, p, m):
                return False, "m=%d row %s differs from the binomial formula" % (m, p)
            rows += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < TRANSITION_BUDGET
    return ok, "%d rows, %.1fs (budget %.0fs)" % (rows, elapsed, TRANSITION_BUDGET)


def check_compatible_single() -> Result:
    rs = RootSystem.from_name("A2")
    checked = 0
    for shapes in smt.shape_vectors(rs, 5):
        for t in smt.standard_tuples(rs, shapes):
            if smt.exists_compatible_word(rs, t) is None:
                continue
            v = a2cb.standard_monomial_vector(rs, t)
            if not v.is_monomial() or list(v.terms.values()) != [1]:
                return False, "tuple %s gives %s" % ([str(p) for p in t], v)
            checked += 1
    return True, "%d compatible standard tuples, all single monomials" % checked


PROJECTION_SWEEP = (("A2", 4), ("B2", 4), ("A3", 3))


def check_projection_integral() -> Result:
    pairs = 0
    for name, limit in PROJECTION_SWEEP:
        rs = RootSystem.from_name(name)
        words = rs.reduced_words(rs.longest)
        for lam in dominant_weights(rs.rank, limit):
            for p in enumerate_B(rs, lam):
                for w in words:
                    if smt.is_compatible_path(rs, p, w):
                        if not smt.lemma10_check(rs, p, w):
                            return False, "%s %s word %s" % (name, p, "".join(map(str, w)))
                        pairs += 1
    return True, "%d compatible (path, word) pairs" % pairs


def check_binfty_strings() -> Result:
    rs = RootSystem.from_name("A2")
    cases = 0
    for m in range(4):
        for n in range(m + 1):
            for l in range(m - n, 5):
                _, _, product = a2cb.example11_standard_monomial(rs, l, m, n)
                target = a2cb.binfty_string_element(l, m, n)
                if product != target:
                    return False, "(%d,%d,%d): %s != %s" % (l, m, n, product, target)
                r, s, t = a2cb.swap_string(l, m, n)
                if a2cb.binfty_string_element_dir(2, r, s, t) != target:
                    return False, "swap (%d,%d,%d) disagrees" % (r, s, t)
                cases += 1
    return True, "%d strings" % cases


def check_a3_incompatible_path() -> Result:
    rs = RootSystem.from_name("A3")
    lam = (1, 0, 1)
    pi = make_path(rs, lam, ["231", "31"], ["1/2"])
    if apply_lowering(rs, straight_path(rs, lam), [2, 1, 3]) != pi:
        return False, "f2 f1 f3 does not reach the path"
    if string(rs, pi, (2, 1, 3)) != [1, 1, 1]:
        return False, "string is %s" % string(rs, pi, (2, 1, 3))
    words = rs.reduced_words(rs.longest)
    if len(words) != 16:
        return False, "%d reduced words of w0" % len(words)
    if any(smt.is_compatible_path(rs, pi, w) for w in words):
        return False, "a compatible word exists"
    if smt.exists_compatible_word(rs, pi) is not None:
        return False, "exists_compatible_word found a word"
    return True, "valid path, string (1,1,1), no compatible word among 16"


def _max_lift_exhaustive(rs, c, bound_idx):
    members = [k for k in coset_space(rs, c.lam).members[c] if bruhat_leq_index(rs, k, bound_idx)]
    tops = [k for k in members
            if not any(j != k and bruhat_leq_index(rs, k, j) for j in members)]
    if not tops:
        return None
    return tops[0] if len(tops) == 1 else tuple(tops)


def check_oracles() -> Result:
    lifts = tuples = pairs = 0
    for name, limit in SMT_SWEEP:
        rs = RootSystem.from_name(name)
        spaces = {}
        for shapes in smt.shape_vectors(rs, limit):
            for lam in shapes:
                spaces.setdefault(lam, coset_space(rs, lam))
            for t in itertools.product(*(enumerate_B(rs, lam) for lam in shapes)):
                greedy = smt.find_defining_chain(rs, t) is not None
                exhaustive = smt.find_defining_chain_exhaustive(rs, t) is not None
                if greedy != exhaustive:
                    return False, "%s tuple %s: greedy %s" % (name, [str(p) for p in t], greedy)
                tuples += 1
        for lam, space in spaces.items():
            for c in space.elements:
                for b in range(rs.weyl_order):
                    if max_lift_below_index(rs, c, b) != _max_lift_exhaustive(rs, c, b):
                        return False, "%s max lift of %r below %s" % (name, c, rs.element_at(b))
                    lifts += 1
    for name in ("A2", "B2", "A3"):
        rs = RootSystem.from_name(name)
        for u, v in itertools.product(rs.elements(), repeat=2):
            if bruhat_leq(rs, u, v) != bruhat_leq_allwords(rs, u, v):
                return False, "%s bruhat %s <= %s" % (name, u, v)
            pairs += 1
    return True, "%d tuples, %d lifts, %d Bruhat pairs" % (tuples, lifts, pairs)


CRITERIA: List[Tuple[int, str, Callable[[], Result]]] = [
    (1, "character identity", check_character_identity),
    (2, "Demazure identity", check_demazure_identity),
    (3, "standard monomial count", check_smt_counting),
    (4, "zero-weight example in B(2,2)", check_zero_weight_paths),
    (5, "transition rows vs binomial formula", check_transition_formula),
    (6, "compatible tuples give single monomials", check_compatible_single),
    (7, "projected exponents integral", check_projection_integral),
    (8, "B(infinity) strings and standard monomials", check_binfty_strings),
    (9, "A3 path f2 f1 f3 has no compatible word", check_a3_incompatible_path),
    (10, "oracle cross-checks", check_oracles),
]


def run_all(selected=None):
    """Run the checks; yields (number, title, ok, detail, seconds)."""
    for number, title, fn in CRITERIA:
        if selected and number not in selected:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # reported as a failure, not a crash
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        yield number, title, ok, detail, time.perf_counter() - start


def format_line(number, title, ok, detail, seconds) -> str:
    return "[%s] criterion %2d %-44s %s (%.2fs)" % (
        "PASS" if ok else "FAIL", number, title, detail, seconds)
