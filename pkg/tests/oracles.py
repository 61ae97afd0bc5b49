"""Independent brute-force checks, deliberately free of the code under test."""
from fractions import Fraction
from itertools import combinations, product
from math import gcd


def factor_valuation(a, p):
    """p-adic valuation by repeated division on a copy; used to cross-check vp."""
    a = abs(a)
    e = 0
    while a % p == 0:
        a, e = a // p, e + 1
    return e


def rank_mod_p(A, p=10007):
    """Rank of an integer matrix over F_p by plain Gaussian elimination."""
    M = [[x % p for x in row] for row in A]
    if not M or not M[0]:
        return 0
    rank, ncols = 0, len(M[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def cokernel_by_cosets(A):
    """Invariant factors of Z^m / im(A) for a square nonsingular A.

    Works in (Z/N)^m with N = |det A|, which contains N Z^m inside im(A).
    Enumerates the image subgroup, then counts |G[q]| = #{x : q x in im A}
    for prime powers q to recover the invariant factors.
    """
    m = len(A)
    N = abs(_det(A))
    assert N != 0
    gens = [tuple(A[r][c] % N for r in range(m)) for c in range(m)]
    L = {tuple([0] * m)}
    frontier = list(L)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % N for a, b in zip(x, g))
                if y not in L:
                    L.add(y)
                    new.append(y)
        frontier = new
    assert len(L) * N == N ** m  # |Z^m / im A| = N
    if N == 1:
        return ()

    def kernel_size(q):
        cnt = sum(1 for x in product(range(N), repeat=m) if tuple(q * a % N for a in x) in L)
        return cnt // len(L)

    # number of cyclic factors whose p-part is at least p^e
    factors = [1] * m
    for p in _prime_factors(N):
        e, prev = 1, 1
        while True:
            size = kernel_size(p ** e)
            if size == prev:
                break
            at_least = 0
            s = size // prev
            while s > 1:
                s //= p
                at_least += 1
            # the at_least largest factors gain another power of p
            for idx in range(m - at_least, m):
                factors[idx] *= p
            prev, e = size, e + 1
    return tuple(f for f in factors if f > 1)


def _det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    return sum((-1) ** c * A[0][c] * _det([row[:c] + row[c + 1:] for row in A[1:]]) for c in range(n))


def solve_half_integer(predicate, bound=100):
    """All a in (1/2)Z with |a| <= bound satisfying ``predicate``."""
    return [Fraction(n, 2) for n in range(-2 * bound, 2 * bound + 1) if predicate(Fraction(n, 2))]


def disjoint_pair_counts(faces):
    """Cell counts of the deleted product by direct enumeration of simplex pairs."""
    counts = {}
    for s, t in product(faces, repeat=2):
        if not set(s) & set(t):
            d = len(s) + len(t) - 2
            counts[d] = counts.get(d, 0) + 1
    return [counts.get(d, 0) for d in range(max(counts) + 1)] if counts else []


def all_faces(facets):
    faces = set()
    for f in facets:
        for d in range(1, len(f) + 1):
            faces.update(combinations(sorted(f), d))
    return faces


def gcd_all(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
