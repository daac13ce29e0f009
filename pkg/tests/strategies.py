import itertools

from hypothesis import strategies as st

from hadamard_varieties import CyclotomicNumber, MultiPoly, ProjectivePoint, root_of_unity

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


def small_fractions(nonzero=False):
    s = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return s.filter(lambda q: q != 0) if nonzero else s


@st.composite
def cyclotomics(draw, nonzero=False, conductors=CONDUCTORS):
    n = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=max(1, n)))
    c = CyclotomicNumber(n, coeffs)
    if nonzero and c.is_zero():
        c = c + 1 if not (c + 1).is_zero() else CyclotomicNumber(n, [1])
    return c


@st.composite
def unit_roots(draw, max_order=8):
    d = draw(st.integers(1, max_order))
    return root_of_unity(d, draw(st.integers(0, d - 1)))


def monomials_of_degree(arity, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(arity), d):
        e = [0] * arity
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@st.composite
def homogeneous_polys(draw, arity=None, max_degree=3, max_terms=4, coeffs=None):
    n = arity if arity is not None else draw(st.integers(2, 4))
    d = draw(st.integers(1, max_degree))
    mons = draw(st.lists(st.sampled_from(monomials_of_degree(n, d)), min_size=1, max_size=max_terms, unique=True))
    cs = coeffs or cyclotomics(nonzero=True, conductors=[1, 3, 4])
    return MultiPoly(n, {m: draw(cs) for m in mons})


@st.composite
def nonzero_points(draw, arity, conductors=(1, 4)):
    coords = [draw(cyclotomics(nonzero=True, conductors=list(conductors))) for _ in range(arity)]
    return ProjectivePoint(tuple(coords))


@st.composite
def coprime_pairs(draw, arity=None, max_degree=3):
    """Two coprime exponent vectors of the same positive degree."""
    n = arity if arity is not None else draw(st.integers(2, 4))
    d = draw(st.integers(1, max_degree))
    split = draw(st.integers(1, n - 1))
    perm = draw(st.permutations(range(n)))
    left, right = perm[:split], perm[split:]

    def spread(vars_):
        e = [0] * n
        for _ in range(d):
            e[draw(st.sampled_from(vars_))] += 1
        return tuple(e)

    return spread(left), spread(right)
