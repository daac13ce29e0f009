"""Binomial hypersurfaces and their idempotency exponents.

For C = Z(X^I1 - alpha X^I2), the r-th Hadamard power is
Z(X^I1 - alpha^r X^I2).  So C^r = C exactly when alpha^(r-1) = 1, and the
least such r is one plus the multiplicative order of alpha.
"""

from hadamard_varieties import (
    BinomialForm,
    HypersurfaceUnion,
    binomial_power,
    classify_binomial,
    cyclic_label,
    detect_type,
    min_idempotent_exponent,
    multiplication_table,
    parse_poly,
    root_of_unity,
    union_power,
)

C = classify_binomial(parse_poly("x0*x2 - z4*x1^2", 3))
ty = detect_type(C)
print(f"{C}: type ({ty.t},{ty.epsilon}), minimal exponent {min_idempotent_exponent(C)}")
for r in range(2, 6):
    print(f"  C^{r} = Z({binomial_power(C, r)})")

print()
print("multiplication table for C_j = Z(x0 - zeta_6^j x1):")
for j, row in enumerate(multiplication_table(6), start=1):
    print(f"  C{j}:", " ".join(f"C{k}" for k in row))

print()
comps = [BinomialForm.with_ratio((2, 0, 0), (0, 1, 1), root_of_unity(6, j)) for j in (1, 3, 5)]
U = HypersurfaceUnion.of(*comps)
for r in (2, 3):
    res = union_power(U, r)
    labels = sorted(cyclic_label(c, 6) for c in res.union.parts())
    print(f"(C1+C3+C5)^{r} =", " + ".join(f"C{k}" for k in labels), " idempotent:", res.idempotent)
