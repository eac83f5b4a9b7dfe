"""Naive reference implementations used as test oracles.

Everything here is written straight from the defining sums with explicit
loops over index tuples, sharing no code with the package beyond Fraction.
Slow, but obviously correct on small inputs.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction as F


def poch(a, m):
    out = F(1)
    for j in range(m):
        out *= F(a) + j
    return out


def chains(r, N):
    """0 < m_1 < ... < m_r < N."""
    return itertools.combinations(range(1, N), r)


def mzv(k, N):
    return sum((F(1, math.prod(m**e for m, e in zip(ms, k))) for ms in chains(len(k), N)), F(0))


def mpl(k, z, N):
    w = F(N) / F(z)
    total = F(0)
    for ms in chains(len(k), N):
        top = ms[-1]
        total += F(1, math.prod(m**e for m, e in zip(ms, k))) * poch(N - top, top) / poch(w - top, top)
    return total


def _blocked(k, N):
    """Arrays n_{i,j} flattened: nondecreasing, strictly increasing across blocks."""
    w = sum(k)
    starts = set(itertools.accumulate(k[:-1]))
    for seq in itertools.combinations_with_replacement(range(1, N), w):
        if all(seq[s - 1] < seq[s] for s in starts):
            blocks, pos = [], 0
            for e in k:
                blocks.append(seq[pos:pos + e])
                pos += e
            yield blocks


def msw_rhs(k, N):
    return hms_rhs(k, [1] * len(k), N)


def hms_rhs(k, x, N):
    total = F(0)
    for blocks in _blocked(k, N):
        term = F(1)
        for xi, block in zip(x, blocks):
            term /= (N * F(xi) - block[0]) * math.prod(block[1:])
        total += term
    return total


def hms_lhs(k, x, N):
    xs = [F(v) for v in x] + [F(1)]
    total = F(0)
    for ms in chains(len(k), N):
        term = F(1, math.prod(m**e for m, e in zip(ms, k)))
        for i, m in enumerate(ms):
            term *= poch(N * xs[i + 1] - m, m) / poch(N * xs[i] - m, m)
        total += term
    return total


def tilde_zeta(k, l, N):
    total = F(0)
    for ms in chains(len(k), N):
        inner = sum((F(1, math.prod(N - n for n in ns)) for ns in
                     itertools.combinations_with_replacement(range(1, ms[-1] + 1), l)), F(0))
        total += F(1, math.prod(m**e for m, e in zip(ms, k))) * inner
    return total


def arakawa_kaneko(k, l, p):
    k = list(k)
    k[-1] += 1
    total = F(0)
    for ms in chains(len(k), p):
        inner = sum((F(1, math.prod(ns)) for ns in
                     itertools.combinations_with_replacement(range(1, ms[-1] + 1), l - 1)), F(0))
        total += F(1, math.prod(m**e for m, e in zip(ms, k))) * inner
    return total


def compositions(k, r):
    return [c for c in itertools.product(range(1, k + 1), repeat=r) if sum(c) == k]


def I0(k, r, h):
    return sorted(c for c in compositions(k, r) if c[-1] > 1 and sum(1 for x in c if x > 1) == h)


def I0_tilde(k, q, h):
    out = []
    for r in range(1, q + 1):
        l = q - r
        for c in compositions(k - l, r) if k - l >= r else []:
            if c[-1] > 1 and sum(1 for x in c if x > 1) == h:
                out.append((c, l))
    return sorted(out)


def tilde_sum(k, q, h, N):
    return sum((tilde_zeta(c, l, N) for c, l in I0_tilde(k, q, h)), F(0))


def pfq_bracket(upper, lower, z, N):
    if N == 0:
        return F(1)
    w = F(N) / F(z)
    total = F(0)
    for m in range(N + 1):
        num = math.prod((poch(a, m) for a in upper), start=F(1)) * poch(N + 1 - m, m)
        den = math.prod((poch(b, m) for b in lower), start=F(1)) * math.factorial(m) * poch(w - m, m)
        total += num / den
    return total


def pfq_at_1(upper, lower, N=None):
    """Terminating sum; by default it stops at the nonpositive-integer upper parameter closest to 0."""
    if N is None:
        N = min(-F(a).numerator for a in upper if F(a).denominator == 1 and a <= 0)
    return sum((math.prod((poch(a, m) for a in upper), start=F(1))
                / (math.prod((poch(b, m) for b in lower), start=F(1)) * math.factorial(m))
                for m in range(N + 1)), F(0))


def beta_closed(a, b, N):
    return poch(F(a) + F(b), N) * math.factorial(N - 1) / (poch(a, N) * poch(b, N))


def disc_weight(a, n, N):
    return poch(1 + n, N - n) / poch(F(a) + n, N - n)


def beta_sum(a, b, N):
    return sum((disc_weight(a, n, N) * disc_weight(b, N - n, N) for n in range(N + 1)), F(0)) / N


def multivariate_beta(a, N):
    d = len(a)
    closed = poch(sum(map(F, a)), N) * F(math.factorial(N - 1)) ** (d - 1) / math.prod(poch(x, N) for x in a)
    disc = F(0)
    for ns in itertools.product(range(N + 1), repeat=d):
        if sum(ns) == N:
            disc += math.prod(disc_weight(x, n, N) for x, n in zip(a, ns))
    return closed, disc / F(N) ** (d - 1)


def chain_sum(upper, lower, N):
    p = len(upper)
    total = F(0)
    for mid in itertools.combinations_with_replacement(range(N + 1), p - 1):
        ns = (0, *mid, N)
        term = F(1)
        for j in range(p):
            lo, hi = ns[j], ns[j + 1]
            a, b = F(upper[j]), F(lower[j])
            term *= math.comb(hi, lo) * poch(a, lo) * poch(b - a, hi - lo) / poch(b, hi)
        total += term
    return total


def thg_int_rhs(a, b, c, z, N):
    w = F(N) / F(z)
    pre = poch(a, N) * poch(F(c) - a, N) / (poch(c, N) * math.factorial(N))
    s = sum((disc_weight(a, n, N) * disc_weight(F(c) - a, N - n, N) * poch(F(b) + w - n, n) / poch(w - n, n)
             for n in range(N + 1)), F(0))
    return pre * s


def power_sums(count):
    """alpha^k + beta^k as {(i, j, l): coeff} in X, Y, Z with alpha + beta = X + Y, alpha beta = Z,
    by expanding sum_k binomial expansions of e1 and e2 (Waring's formula)."""
    out = []
    for k in range(1, count + 1):
        poly: dict = {}
        for j in range(k // 2 + 1):
            # p_k = sum_j (-1)^j k/(k-j) C(k-j, j) e1^(k-2j) e2^j
            c = F((-1) ** j * k, k - j) * math.comb(k - j, j)
            d = k - 2 * j
            for i in range(d + 1):
                key = (i, d - i, j)
                poly[key] = poly.get(key, 0) + c * math.comb(d, i)
        out.append({m: c for m, c in poly.items() if c})
    return out


def rref_solve(rows, rhs):
    """Exact solution of an overdetermined consistent linear system, or None if inconsistent/singular."""
    n = len(rows[0])
    m = [list(map(F, r)) + [F(v)] for r, v in zip(rows, rhs)]
    piv_row = 0
    pivots = []
    for col in range(n):
        sel = next((i for i in range(piv_row, len(m)) if m[i][col] != 0), None)
        if sel is None:
            return None
        m[piv_row], m[sel] = m[sel], m[piv_row]
        pv = m[piv_row][col]
        m[piv_row] = [x / pv for x in m[piv_row]]
        for i in range(len(m)):
            if i != piv_row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[piv_row])]
        pivots.append(col)
        piv_row += 1
    if any(row[-1] != 0 for row in m[piv_row:]):
        return None
    return [m[i][-1] for i in range(n)]


def partitions(k, smallest=2):
    if k == 0:
        return [()]
    return [(f,) + rest for f in range(smallest, k + 1) for rest in partitions(k - f, f)]
