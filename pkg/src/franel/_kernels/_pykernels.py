"""Pure-Python kernels. Same signatures and results as the compiled module."""

from __future__ import annotations


def cell_sum(coeffs, multipliers, breakpoints, scale, weights):
    """Integer core of the piecewise integration.

    ``coeffs`` are the integer coefficients c_0..c_k of d*B_k(y). On each
    cell [t0, t1] of ``breakpoints`` (integers, x = t/scale) factor i is the
    integer polynomial Q_i(t) = sum_j c_j scale^(k-j) (a_i t - n_i scale)^j
    with n_i = floor(a_i t0 / scale). Returns
    sum over cells and j of q_j * weights[j] * (t1^(j+1) - t0^(j+1)),
    where q_j are the coefficients of prod_i Q_i.
    """
    k = len(coeffs) - 1
    L = scale
    scaled = [coeffs[j] * L ** (k - j) for j in range(k + 1)]
    total = 0
    prev_powers = None
    for t0, t1 in zip(breakpoints, breakpoints[1:]):
        prod = [1]
        for a in multipliers:
            b = -(a * t0 // L) * L
            # Horner on polynomials: fac = fac*(a t + b) + scaled[j]
            fac = [scaled[k]]
            for j in range(k - 1, -1, -1):
                nxt = [0] * (len(fac) + 1)
                for i, f in enumerate(fac):
                    nxt[i] += f * b
                    nxt[i + 1] += f * a
                nxt[0] += scaled[j]
                fac = nxt
            out = [0] * (len(prod) + len(fac) - 1)
            for i, p in enumerate(prod):
                if p:
                    for j, f in enumerate(fac):
                        out[i + j] += p * f
            prod = out
        deg = len(prod)
        if prev_powers is None or len(prev_powers) != deg + 1:
            lo = [1] * (deg + 1)
            for j in range(1, deg + 1):
                lo[j] = lo[j - 1] * t0
        else:
            lo = prev_powers
        hi = [1] * (deg + 1)
        for j in range(1, deg + 1):
            hi[j] = hi[j - 1] * t1
        for j, q in enumerate(prod):
            if q:
                total += q * weights[j] * (hi[j + 1] - lo[j + 1])
        prev_powers = hi
    return total


def lattice_numerator(multipliers, wpos, wneg, bound):
    """Sum over 0 < |u_i| <= bound with sum a_i u_i = 0 of prod_i w(u_i),
    where w(u) = wpos[u-1] for u > 0 and wneg[-u-1] for u < 0.

    Factors are folded in one at a time into a table indexed by the
    partial linear form; the last coordinate is read off the table.
    """
    U = bound
    m = len(multipliers)
    span = 0
    state = [1]
    for a in multipliers[:-1]:
        new_span = span + a * U
        new = [0] * (2 * new_span + 1)
        shift = new_span - span
        for idx, s in enumerate(state):
            if not s:
                continue
            base = idx + shift
            for u in range(1, U + 1):
                new[base + a * u] += s * wpos[u - 1]
                new[base - a * u] += s * wneg[u - 1]
        state = new
        span = new_span
    a = multipliers[m - 1]
    total = 0
    for u in range(1, U + 1):
        # the first m-1 terms must sum to -a*u (resp. +a*u)
        off = a * u
        if off > span:
            break
        total += state[span - off] * wpos[u - 1]
        total += state[span + off] * wneg[u - 1]
    return total
