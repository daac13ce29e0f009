"""Varieties cut out by several binomials.

Powers act generatorwise, so the minimal idempotency exponent is one plus
the lcm of the orders of the generator ratios.  The brute-force check
compares reduced Groebner bases for every candidate exponent.
"""

from hadamard_varieties import (
    BinomialForm,
    BinomialVariety,
    is_idempotent,
    parse_poly,
    root_of_unity,
    variety_min_exponent,
)
from hadamard_varieties.binomial import binomial_variety

roots = {2: root_of_unity(2), 3: root_of_unity(3), 4: root_of_unity(4)}

for orders in [(2, 3), (2, 4), (3, 4), (2, 3, 4)]:
    n = 2 * len(orders)
    gens = []
    for k, d in enumerate(orders):
        I1, I2 = [0] * n, [0] * n
        I1[2 * k], I2[2 * k + 1] = 1, 1
        gens.append(BinomialForm.with_ratio(I1, I2, roots[d]))
    r = variety_min_exponent(BinomialVariety(tuple(gens)))
    print(f"orders {orders}: exponent {r.exponent}, brute force agrees: {r.verified},"
          f" lcm(t_i/gcd(t_i,eps_i)) + 1 = {r.formula_exponent}")

V = binomial_variety(parse_poly("x0*x3 - x1*x2", 4), parse_poly("x0^2 - x1*x3", 4))
print("pure differences are idempotent at 2:", is_idempotent(V, 2))
