"""Cross-path and identity suites.

Every suite recomputes a family of quantities along two or more independent
routes and returns a list of human-readable failure descriptions (empty on
success).  Keyword defaults are the bounds the project is accepted at; the
CLI lets callers rescale the partition-weight grids.
"""

import random

from . import chebyshev, demazure, hall_littlewood, kostka
from .characters import (
    graded_character,
    irreducible_multiplicity,
    irreducible_multiplicity_ses,
    sl2_character,
)
from .hall_littlewood import SymPoly2, bernstein, modified_hall_littlewood, schur_poly
from .partitions import Partition, demazure_partition, partitions_of
from .polynomials import GradedCharacter, IntPoly

_MAX_REPORTED = 25


def _all_partitions(max_weight):
    for weight in range(max_weight + 1):
        for xi in partitions_of(weight):
            yield xi


def _two_row_shapes(weight):
    return [Partition((weight - b, b)) for b in range(weight // 2 + 1)]


def check_chebyshev(max_n=60, max_pair=30, split_weight=14):
    """Recurrence vs closed form, the index-shuffling product identity, and
    the plus/minus splitting of partition products."""
    failures = []
    for n in range(max_n + 1):
        if chebyshev.cheb(n) != chebyshev.cheb_closed(n):
            failures.append("cheb(%d): recurrence and closed form disagree" % n)
    x = IntPoly.monomial(1)
    for i in range(1, max_pair + 1):
        for j in range(1, i + 1):
            lhs = chebyshev.cheb(i) * chebyshev.cheb(j)
            rhs = chebyshev.cheb(i + 1) * chebyshev.cheb(j - 1) + x ** j * chebyshev.cheb(i - j)
            if lhs != rhs:
                failures.append("product identity fails at i=%d j=%d" % (i, j))
    for xi in _all_partitions(split_weight):
        if len(xi) < 2:
            continue
        split = chebyshev.cheb_product(xi.plus()) + chebyshev.cheb_product(xi.minus()).shift(xi[-1])
        if split != chebyshev.cheb_product(xi):
            failures.append("plus/minus split fails at xi=%s" % (xi,))
    return failures


def _flag_grid(max_weight):
    for xi in _all_partitions(max_weight):
        lo = xi[0] if xi else 1
        for level in range(lo, xi.weight + 1):
            yield xi, level


def check_flag_crosspath(max_weight=14):
    """Graded recursion at q = 1 against the Chebyshev series coefficient,
    over every partition, admissible level, and highest weight."""
    failures = []
    for xi, level in _flag_grid(max_weight):
        for n in range(xi.weight + 1):
            graded = demazure.graded_multiplicity(xi, level, n).evaluate(1)
            numeric = chebyshev.numerical_multiplicity(xi, level, n)
            if graded != numeric:
                failures.append(
                    "xi=%s level=%d n=%d: graded(1)=%d vs series=%d"
                    % (xi, level, n, graded, numeric)
                )
    return failures


def check_dimensions(max_weight=14, trivial_level=5, trivial_n=10):
    """Flag multiplicities weighted by Demazure dimensions must recover the
    fusion product dimension; a Demazure module's own flag is trivial."""
    failures = []
    for xi, level in _flag_grid(max_weight):
        total = sum(
            poly.evaluate(1) * demazure.demazure_dimension(level, n)
            for n, poly in demazure.flag_table(xi, level).items()
        )
        expected = 1
        for part in xi:
            expected *= part + 1
        if total != expected:
            failures.append(
                "dimension sum %d != %d at xi=%s level=%d" % (total, expected, xi, level)
            )
    one = IntPoly.one()
    for level in range(1, trivial_level + 1):
        for n in range(trivial_n + 1):
            table = demazure.flag_table(demazure_partition(level, n), level)
            if table != {n: one}:
                failures.append("flag of demazure_partition(%d, %d) not trivial: %r" % (level, n, table))
    return failures


def check_kostka_threepath(max_weight=12):
    """Recursion, operator expansion, and charge oracle must agree exactly,
    including a few pinned small values."""
    failures = []
    for weight in range(max_weight + 1):
        contents = partitions_of(weight)
        for lam in _two_row_shapes(weight):
            for mu in contents:
                via_rec = kostka.cocharge_kostka(lam, mu)
                try:
                    via_ops = hall_littlewood.cocharge_by_operators(lam, mu)
                except Exception as exc:  # ConsistencyError included
                    failures.append("operator route failed at lam=%s mu=%s: %s" % (lam, mu, exc))
                    continue
                try:
                    via_charge = kostka.kostka_by_charge(lam, mu).reverse(mu.weighted_size())
                except ValueError as exc:
                    failures.append("charge route failed at lam=%s mu=%s: %s" % (lam, mu, exc))
                    continue
                if not via_rec == via_ops == via_charge:
                    failures.append(
                        "lam=%s mu=%s: rec=%s ops=%s charge=%s"
                        % (lam, mu, via_rec, via_ops, via_charge)
                    )
    pinned = [
        ((2, 1), (1, 1, 1), IntPoly({1: 1, 2: 1})),
        ((1, 1), (1, 1), IntPoly({1: 1})),
        ((2,), (1, 1), IntPoly.one()),
    ]
    for lam, mu, expected in pinned:
        got = kostka.cocharge_kostka(lam, mu)
        if got != expected:
            failures.append("pinned cocharge lam=%s mu=%s: got %s, want %s" % (lam, mu, got, expected))
    return failures


def _random_symmetric(rng, max_deg=6):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        a = rng.randint(0, max_deg)
        b = rng.randint(0, a)
        coeff = IntPoly.monomial(rng.randint(0, 3), rng.randint(-4, 4))
        for key in {(a, b), (b, a)}:
            terms[key] = terms.get(key, IntPoly.zero()) + coeff
    return SymPoly2(terms)


def check_operator_identities(rewrite_weight=10, hrelation_max=12, seed=0x5EED):
    """The four raising-operator identities, on their stated ranges; the
    exact-division remainder is checked inside every operator application."""
    failures = []
    rng = random.Random(seed)
    q = IntPoly.monomial(1)

    for m in range(6):
        for k in range(4):
            for _ in range(2):
                f = _random_symmetric(rng)
                lhs = bernstein(m, f.times_x1x2(k))
                rhs = bernstein(m, f).times_x1x2(k).scale(q ** k)
                if lhs != rhs:
                    failures.append("square identity fails at m=%d k=%d" % (m, k))

    for m in range(6):
        for _ in range(3):
            f = _random_symmetric(rng)
            lhs = bernstein(m, bernstein(m + 1, f))
            rhs = bernstein(m + 1, bernstein(m, f)).scale(q)
            if lhs != rhs:
                failures.append("commutation fails at m=%d" % m)

    one = IntPoly.one()
    for m in range(1, hrelation_max + 1):
        # h_m == x1 * h_{m-1} + x2^m, compared term by term after expansion
        expected = {(i + 1, m - 1 - i): one for i in range(m)}
        expected[(0, m)] = one
        got = {key: c for key, c in hall_littlewood.complete_homogeneous(m).terms()}
        if got != expected:
            failures.append("h relation fails at m=%d" % m)

    for m1 in range(1, 9):
        for m2 in range(1, m1 + 1):
            lhs = modified_hall_littlewood((m1, m2))
            rhs = modified_hall_littlewood(Partition((m1 + 1, m2 - 1))).scale(q)
            rhs = rhs + modified_hall_littlewood((m1 - m2,)).times_x1x2(m2)
            if lhs != rhs:
                failures.append("two-row rewrite fails at (%d, %d)" % (m1, m2))

    for mu in _all_partitions(rewrite_weight):
        n = len(mu)
        if n < 2:
            continue
        conj = mu.conjugate()
        col = mu[n - 2] + 1
        height = conj[col - 1] if col <= len(conj) else 0
        first = modified_hall_littlewood(mu.plus()).scale(q ** (n - 1 - height))
        second = (
            modified_hall_littlewood(mu.minus())
            .times_x1x2(mu[-1])
            .scale(q ** ((n - 2) * mu[-1]))
        )
        if first + second != modified_hall_littlewood(mu):
            failures.append("general rewrite fails at mu=%s" % (mu,))
    return failures


def check_characters(classical_weight=12, hl_weight=10, compat_weight=10):
    """Character coherence: the classical limit factorizes, the Schur-side
    sum matches the reversed Hall-Littlewood polynomial, and flags decompose
    the character."""
    failures = []
    for xi in _all_partitions(classical_weight):
        product = GradedCharacter({0: 1})
        for part in xi:
            product = product * sl2_character(part)
        if graded_character(xi).specialize_q1() != product.specialize_q1():
            failures.append("classical limit fails at xi=%s" % (xi,))

    for xi in _all_partitions(hl_weight):
        weight = xi.weight
        lhs = SymPoly2()
        for r in range(weight % 2, weight + 1, 2):
            mult = irreducible_multiplicity(xi, r)
            if mult:
                lhs = lhs + schur_poly((weight + r) // 2, (weight - r) // 2).scale(mult)
        try:
            rhs = modified_hall_littlewood(xi).reverse_q(xi.weighted_size())
        except ValueError as exc:
            failures.append("reversal failed at xi=%s: %s" % (xi, exc))
            continue
        if lhs != rhs:
            failures.append("Hall-Littlewood consistency fails at xi=%s" % (xi,))

    for xi in _all_partitions(compat_weight):
        lo = xi[0] if xi else 1
        for level in range(lo, xi.weight + 1):
            total = GradedCharacter()
            for n, poly in demazure.flag_table(xi, level).items():
                total = total + graded_character(demazure_partition(level, n)).scale(poly)
            if total != graded_character(xi):
                failures.append("flag/character compatibility fails at xi=%s level=%d" % (xi, level))

    pinned = graded_character((1, 1))
    expected = GradedCharacter({2: 1, 0: IntPoly({0: 1, 1: 1}), -2: 1})
    if pinned != expected:
        failures.append("pinned character of (1,1): got %r" % (pinned,))
    decomposition = graded_character((2,)) + GradedCharacter({0: 1}).scale(IntPoly.monomial(1))
    if decomposition != expected:
        failures.append("pinned level-2 decomposition of (1,1) character failed")
    return failures


def check_weyl_series(max_n=4, levels=(2, 3), order=6):
    """Series coefficients against the one-column multiplicities they are
    defined to generate."""
    failures = []
    for level in levels:
        for n in range(max_n + 1):
            series = chebyshev.weyl_generating_series(n, level, order)
            for r in range(order):
                column = Partition((1,) * (n + 2 * r))
                direct = chebyshev.numerical_multiplicity(column, level, n)
                if series[r] != direct:
                    failures.append(
                        "weyl series n=%d level=%d r=%d: %d vs %d"
                        % (n, level, r, series[r], direct)
                    )
    return failures


def check_ses_path(max_weight=12):
    """The short-exact-sequence recursion against the Kostka route."""
    failures = []
    for xi in _all_partitions(max_weight):
        for r in range(xi.weight + 3):
            via_ses = irreducible_multiplicity_ses(xi, r)
            via_kostka = irreducible_multiplicity(xi, r)
            if via_ses != via_kostka:
                failures.append(
                    "xi=%s r=%d: ses=%s vs kostka=%s" % (xi, r, via_ses, via_kostka)
                )
    return failures


# name -> callable(max_weight) rescaling only the partition-weight grids;
# fixed numeric ranges keep their acceptance defaults.
SUITES = (
    ("chebyshev", lambda w: check_chebyshev(split_weight=w)),
    ("flag-crosspath", check_flag_crosspath),
    ("dimensions", check_dimensions),
    ("kostka-threepath", check_kostka_threepath),
    ("operator-identities", lambda w: check_operator_identities(rewrite_weight=w)),
    ("characters", lambda w: check_characters(w, w, w)),
    ("weyl-series", lambda w: check_weyl_series()),
    ("ses-path", check_ses_path),
)


def run_selfcheck(max_weight=10):
    """Run every suite with partition grids capped at max_weight.

    Returns a list of (name, failures) in registry order; failure lists are
    truncated to a readable length.
    """
    report = []
    for name, suite in SUITES:
        failures = suite(max_weight)
        if len(failures) > _MAX_REPORTED:
            failures = failures[:_MAX_REPORTED] + [
                "... %d further failures suppressed" % (len(failures) - _MAX_REPORTED)
            ]
        report.append((name, failures))
    return report
