"""Checking a closed form with floating-point samples.

Points are drawn on each factor, multiplied coordinatewise and substituted
into the claimed equation.  A correct claim leaves rounding-level residuals
and a perturbed one does not.
"""

from fractions import Fraction

from hadamard_varieties import BinomialForm, binomial_product, root_of_unity, verify_product_claim

C = BinomialForm.with_ratio((1, 0, 1), (0, 2, 0), 2 * root_of_unity(3))
D = BinomialForm.with_ratio((1, 0, 1), (0, 2, 0), -root_of_unity(4))
E = binomial_product(C, D)
print("claimed product:", E)

good = verify_product_claim(C, D, E.poly(), samples=200, seed=0)
print("correct claim:  ", good.to_dict())

wrong = BinomialForm.with_ratio((1, 0, 1), (0, 2, 0), E.ratio * Fraction(11, 10))
bad = verify_product_claim(C, D, wrong.poly(), samples=200, seed=0)
print("perturbed claim:", bad.to_dict())
