"""Independent reference computations shared by the test modules."""

from itertools import permutations, product

import sympy

from lltlab.symfunc import SymPoly

q = sympy.Symbol("q")


def xs(n):
    return sympy.symbols(f"x1:{n + 1}")


def expand_sympoly(a: SymPoly):
    """Write out every monomial of ``a`` explicitly as a sympy expression."""
    x = xs(a.num_vars)
    total = 0
    for lam, c in a.items():
        coeff = sum(int(v) * q**e for e, v in enumerate(c.coeffs))
        exps = tuple(lam) + (0,) * (a.num_vars - len(lam))
        for alpha in set(permutations(exps)):
            total += coeff * sympy.prod([x[i] ** alpha[i] for i in range(a.num_vars)])
    return sympy.expand(total)


def ssyt_count(lam, n):
    """Semistandard tableaux of straight shape lam with entries <= n, by brute force."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    count = 0
    for fill in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all(t[(r, c)] <= t[(r, c + 1)] for (r, c) in cells if (r, c + 1) in t) and all(
            t[(r, c)] < t[(r + 1, c)] for (r, c) in cells if (r + 1, c) in t
        ):
            count += 1
    return count


def coloring_table(g, n):
    """Every coloring of ``g`` with colors 1..n, bucketed by weight vector: {weight: {q exponent: count}}."""
    table = {}
    for f in product(range(1, n + 1), repeat=g.n):
        if any(f[u - 1] <= f[v - 1] for u, v in g.e1) or any(f[u - 1] < f[v - 1] for u, v in g.e2):
            continue
        inv = sum(1 for u, v in g.ed if f[u - 1] > f[v - 1])
        w = tuple(f.count(c) for c in range(1, n + 1))
        bucket = table.setdefault(w, {})
        bucket[inv] = bucket.get(inv, 0) + 1
    return table


def _llt_expr(g, n):
    x = xs(n)
    total = 0
    for w, counts in coloring_table(g, n).items():
        mono = sympy.prod([x[i] ** w[i] for i in range(n)])
        total += sum(c * q**e for e, c in counts.items()) * mono
    return total


def _induced(g, block):
    from lltlab.lltgraph import LLTGraph

    idx = {v: i for i, v in enumerate(sorted(block), 1)}

    def keep(es):
        return {(idx[u], idx[v]) for u, v in es if u in idx and v in idx}

    return LLTGraph(len(block), keep(g.e1), keep(g.e2), keep(g.ed))


def cumulant_expr(g, n):
    """Alternating set partition sum over brute-force coloring sums, divided by (q-1)^(m-1) in sympy."""
    from sympy.utilities.iterables import multiset_partitions

    numerator = 0
    for part in multiset_partitions(list(range(1, g.n + 1))):
        k = len(part)
        term = sympy.Integer((-1) ** (k - 1) * sympy.factorial(k - 1))
        for block in part:
            term *= _llt_expr(_induced(g, block), n)
        numerator += term
    quotient, remainder = sympy.div(sympy.expand(numerator), (q - 1) ** (g.n - 1), q)
    assert remainder == 0
    return sympy.expand(quotient)
