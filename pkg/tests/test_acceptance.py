"""Acceptance criteria, one test per criterion, each at its stated tolerance."""

import io
import itertools
import math
import random
import time
from fractions import Fraction

from hadamard_varieties import (
    GREVLEX,
    BinomialForm,
    BinomialVariety,
    CoordinateHyperplane,
    HypersurfaceUnion,
    IdealPresentation,
    MultiPoly,
    ProjectivePoint,
    binomial_power,
    binomial_product,
    buchberger,
    coordinate_product,
    cyclic_label,
    hadamard_transform,
    ideal,
    ideal_equal,
    invert_point,
    is_groebner_basis,
    is_idempotent,
    root_of_unity,
    star_varieties_elim,
    transform_ideal,
    union_power,
    variety_min_exponent,
    verify_product_claim,
)
from hadamard_varieties.binomial import brute_force_min_exponent
from hadamard_varieties.cli import run

from acceptance_log import criterion

# row C_j, column C_k holds C_{j+k mod 6}, with C_6 acting as the identity
REFERENCE_TABLE = [
    [2, 3, 4, 5, 6, 1],
    [3, 4, 5, 6, 1, 2],
    [4, 5, 6, 1, 2, 3],
    [5, 6, 1, 2, 3, 4],
    [6, 1, 2, 3, 4, 5],
    [1, 2, 3, 4, 5, 6],
]

ROOT_ORDERS = [1, 2, 3, 4, 6, 8, 12, 24]


def random_scalar(rng, nonzero=True):
    while True:
        d = rng.choice(ROOT_ORDERS)
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4)) * root_of_unity(d, rng.randrange(d))
        if rng.random() < 0.3:
            c = c + rng.randint(-2, 2)
        if not nonzero or not c.is_zero():
            return c


def random_exponent(rng, arity, degree):
    e = [0] * arity
    for _ in range(degree):
        e[rng.randrange(arity)] += 1
    return tuple(e)


def random_homogeneous(rng, arity, degree, max_terms, scalar=random_scalar):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_exponent(rng, arity, degree)] = scalar(rng)
    return MultiPoly(arity, terms)


def random_point(rng, arity):
    return ProjectivePoint(tuple(random_scalar(rng) for _ in range(arity)))


def random_coprime_pair(rng, arity, degree):
    vars_ = list(range(arity))
    rng.shuffle(vars_)
    cut = rng.randint(1, arity - 1)
    left, right = vars_[:cut], vars_[cut:]

    def spread(pool):
        e = [0] * arity
        for _ in range(degree):
            e[rng.choice(pool)] += 1
        return tuple(e)

    return spread(left), spread(right)


def cj(j, pair=((2, 0, 0), (0, 1, 1))):
    return BinomialForm.with_ratio(*pair, root_of_unity(6, j))


@criterion(1, "multiplication table t-1=6 matches the reference table")
def test_criterion_1_table(detail):
    out = io.StringIO()
    start = time.perf_counter()
    code = run(["table", "--order", "6", "--format", "json"], out=out, err=io.StringIO())
    elapsed = time.perf_counter() - start
    import json

    table = json.loads(out.getvalue())["result"]["table"]
    matches = sum(table[j][k] == REFERENCE_TABLE[j][k] for j in range(6) for k in range(6))
    detail.update(entries=f"{matches}/36", seconds=f"{elapsed:.3f}")
    assert code == 0
    assert matches == 36
    assert elapsed < 1.0


@criterion(2, "(C1+C3+C5)^2 = C2+C4+C6 and (C1+C3+C5)^3 = C1+C3+C5")
def test_criterion_2_reducible_power(detail):
    U = HypersurfaceUnion.of(cj(1), cj(3), cj(5))
    sq = sorted(cyclic_label(c, 6) for c in union_power(U, 2).union.parts())
    cube_res = union_power(U, 3)
    cube = sorted(cyclic_label(c, 6) for c in cube_res.union.parts())
    detail.update(r2=sq, r3=cube)
    assert sq == [2, 4, 6]
    assert cube == [1, 3, 5]
    assert cube_res.idempotent and cube_res.conditions_hold


@criterion(3, "(f^P)^(1/P) = f and (f^(1/P))^P = f on 100 random exact instances")
def test_criterion_3_transform_inverse(detail):
    rng = random.Random(3)
    start = time.perf_counter()
    ok = 0
    for _ in range(100):
        arity = rng.randint(2, 5)
        f = random_homogeneous(rng, arity, rng.randint(1, 5), 6)
        P = random_point(rng, arity)
        Pinv = invert_point(P)
        a = hadamard_transform(hadamard_transform(f, P), Pinv) == f
        b = hadamard_transform(hadamard_transform(f, Pinv), P) == f
        ok += a and b
    elapsed = time.perf_counter() - start
    detail.update(exact=f"{ok}/100", seconds=f"{elapsed:.2f}")
    assert ok == 100
    assert elapsed < 5.0


@criterion(4, "Groebner bases transfer under the transformation (50 random ideals)")
def test_criterion_4_groebner_transfer(detail):
    rng = random.Random(4)
    small = lambda r: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))  # noqa: E731
    start = time.perf_counter()
    ok = 0
    for _ in range(50):
        arity = rng.randint(2, 4)
        gens = [random_homogeneous(rng, arity, rng.randint(1, 3), 3, small) for _ in range(rng.randint(1, 3))]
        P = random_point(rng, arity)
        G = buchberger(gens, GREVLEX)
        T = transform_ideal(IdealPresentation(tuple(G), GREVLEX, is_groebner=True), P)
        direct = IdealPresentation(tuple(hadamard_transform(g, P) for g in gens), GREVLEX)
        good = is_groebner_basis(list(T.generators), GREVLEX)
        good = good and ideal_equal(T, direct)
        good = good and set(T.generators) == set(buchberger(direct.generators, GREVLEX))
        ok += good
    elapsed = time.perf_counter() - start
    detail.update(passed=f"{ok}/50", seconds=f"{elapsed:.2f}")
    assert ok == 50
    assert elapsed < 60.0


@criterion(5, "closed-form binomial products equal elimination and pass the numeric oracle")
def test_criterion_5_binomial_product(detail):
    rng = random.Random(5)
    exact_ok = numeric_ok = 0
    worst = 0.0
    for _ in range(25):
        arity = rng.randint(2, 4)
        pair = random_coprime_pair(rng, arity, rng.randint(1, 3))
        C = BinomialForm.with_ratio(*pair, random_scalar(rng))
        D = BinomialForm.with_ratio(*pair, random_scalar(rng))
        E = binomial_product(C, D)
        exact_ok += ideal_equal(E.ideal(), star_varieties_elim(C.ideal(), D.ideal()))
        rep = verify_product_claim(C, D, E.poly(), samples=200, seed=rng.randrange(10**6), tol=1e-8)
        numeric_ok += rep.verdict
        worst = max(worst, rep.max_residual)
    detail.update(exact=f"{exact_ok}/25", numeric=f"{numeric_ok}/25", max_residual=f"{worst:.2e}")
    assert exact_ok == 25
    assert numeric_ok == 25


@criterion(6, "type (t,eps) idempotency exponents for 2 <= t <= 8")
def test_criterion_6_types(detail):
    pair = ((1, 0, 1), (0, 2, 0))
    checked = 0
    for t in range(2, 9):
        for eps in range(1, t):
            C = BinomialForm.of_type(*pair, t, eps)
            g = math.gcd(t - 1, eps)
            if g == 1:
                assert ideal_equal(binomial_power(C, t).ideal(), C.ideal()), (t, eps)
                for r in range(2, t):
                    assert not ideal_equal(binomial_power(C, r).ideal(), C.ideal()), (t, eps, r)
            else:
                early = (t - 1) // g + 1
                assert ideal_equal(binomial_power(C, early).ideal(), C.ideal()), (t, eps)
            checked += 1
    detail.update(types=checked)


@criterion(7, "random pure-difference binomial varieties are idempotent at 2")
def test_criterion_7_pure_differences(detail):
    rng = random.Random(7)
    ok = 0
    for _ in range(10):
        arity = rng.randint(2, 5)
        gens = []
        for _ in range(rng.randint(1, 3)):
            gens.append(BinomialForm.make(*random_coprime_pair(rng, arity, rng.randint(1, 3))))
        V = BinomialVariety(tuple(gens))
        ok += is_idempotent(V, 2)
    detail.update(idempotent=f"{ok}/10")
    assert ok == 10


ORDER_ROOTS = {2: root_of_unity(2), 3: root_of_unity(3), 4: root_of_unity(4)}


def _variety_with_orders(orders):
    arity = 2 * len(orders)
    gens = []
    for k, d in enumerate(orders):
        I1 = [0] * arity
        I2 = [0] * arity
        I1[2 * k] = 1
        I2[2 * k + 1] = 1
        gens.append(BinomialForm.with_ratio(I1, I2, ORDER_ROOTS[d]))
    return BinomialVariety(tuple(gens))


@criterion(8, "binomial variety minimal exponents 1 + lcm(orders), brute-force confirmed")
def test_criterion_8_variety_exponents(detail):
    expected = {(2, 3): 7, (2, 4): 5, (3, 4): 13, (2, 3, 4): 13}
    for orders, t in expected.items():
        V = _variety_with_orders(orders)
        r = variety_min_exponent(V)
        base = V.ideal()
        assert r.exponent == t, orders
        assert ideal_equal(V.power(t).ideal(), base)
        assert not any(ideal_equal(V.power(s).ideal(), base) for s in range(2, t))
        assert brute_force_min_exponent(V) == t
        assert r.verified
        detail["".join(map(str, orders))] = f"{r.exponent}(formula {r.formula_exponent})"


@criterion(9, "coordinate hyperplane products and unions")
def test_criterion_9_coordinate_hyperplanes(detail):
    arity = 4
    hyper = [ideal(MultiPoly.var(arity, i)) for i in range(arity)]
    products = 0
    for size in (2, 3):
        for idx in itertools.combinations(range(arity), size):
            acc = hyper[idx[0]]
            for i in idx[1:]:
                acc = star_varieties_elim(acc, hyper[i])
            S = coordinate_product([CoordinateHyperplane(i) for i in idx])
            assert ideal_equal(acc, S.ideal(arity)), idx
            products += 1
    unions = 0
    for size in range(1, arity + 1):
        for idx in itertools.combinations(range(arity), size):
            U = HypersurfaceUnion.of(*[CoordinateHyperplane(i) for i in idx])
            for t in range(2, 7):
                assert union_power(U, t).union.component_set() == U.component_set()
                unions += 1
    detail.update(products=products, union_powers=unions)


@criterion(10, "numeric oracle rejects 10%-perturbed product equations")
def test_criterion_10_negative_control(detail):
    rejected = 0
    for seed in range(40):
        rng = random.Random(1000 + seed)
        arity = rng.randint(2, 4)
        pair = random_coprime_pair(rng, arity, rng.randint(1, 3))
        C = BinomialForm.with_ratio(*pair, random_scalar(rng))
        D = BinomialForm.with_ratio(*pair, random_scalar(rng))
        E = binomial_product(C, D)
        wrong = BinomialForm.with_ratio(*pair, E.ratio * Fraction(11, 10))
        rep = verify_product_claim(C, D, wrong.poly(), samples=200, seed=seed, tol=1e-8)
        rejected += (not rep.verdict) and rep.max_residual >= 1e-3
    detail.update(rejected=f"{rejected}/40")
    assert rejected >= 38
