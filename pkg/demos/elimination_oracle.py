"""Hadamard products of varieties by elimination.

The product V * W is the closure of all coordinatewise products.  It can be
computed by adding x_i - y_i z_i to I(V)(y) + I(W)(z) and eliminating y and
z.  This is slow compared to the closed forms, but it is independent of them.
"""

import time

from hadamard_varieties import LEX, buchberger, ideal, parse_poly, star_varieties_elim
from hadamard_varieties.parsing import format_poly


def show(V, W):
    start = time.perf_counter()
    out = star_varieties_elim(ideal(parse_poly(V, 3)), ideal(parse_poly(W, 3)))
    gens = ", ".join(format_poly(g.monic()) for g in out.generators)
    print(f"Z({V}) * Z({W}) = Z({gens})   [{time.perf_counter() - start:.2f}s]")


show("x0 - 2*x1", "x0 - 3*x1")
show("x0*x2 - x1^2", "x0*x2 - x1^2")
show("x0*x2 + x1^2", "x0*x2 - 2*x1^2")
show("x0*x2 - z3*x1^2", "x0*x2 - z3*x1^2")

print()
print("lex basis of <x0^2 - x1*x2, x0*x1 - x2^2>:")
for g in buchberger([parse_poly("x0^2 - x1*x2", 3), parse_poly("x0*x1 - x2^2", 3)], LEX):
    print("  ", g)
