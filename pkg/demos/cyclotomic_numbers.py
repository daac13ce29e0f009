"""Exact arithmetic with roots of unity.

Every coefficient in this package lives in some Q(zeta_N).  Values with
different conductors mix freely; equality and hashing go through the
smallest field that contains the value.
"""

from hadamard_varieties import complex_embedding, cyclotomic_polynomial, multiplicative_order, root_of_unity
from hadamard_varieties.parsing import format_number

z6 = root_of_unity(6)
z4 = root_of_unity(4)

print("Phi_6 coefficients:", cyclotomic_polynomial(6))
print("zeta_6^3 =", format_number(z6 ** 3))
print("zeta_6^2 =", format_number(z6 ** 2), "(lives in Q(zeta_3))")

# mixing conductors embeds both operands into Q(zeta_12)
mixed = z6 + z4
print("zeta_6 + zeta_4 =", format_number(mixed), "~", complex_embedding(mixed))

for value in (z6 ** 2, -z6 ** 2, 1 + z4, (3 + 4 * z4) / 5):
    print(f"order of {format_number(value)}:", multiplicative_order(value))
