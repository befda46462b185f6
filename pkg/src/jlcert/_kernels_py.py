"""Pure-Python twin of ``_kernels.pyx``; same algorithm, same results."""

MAX_N = 60


def cyclic_two_counts(n, prune=True):
    """Histogram, by number of 2s, of ternary strings of length ``n`` with no
    cyclically adjacent pair drawn from {1, 2}.

    Odometer over {0,1,2}^n. With ``prune`` a bad adjacent pair skips its
    whole subtree; without it every one of the 3**n strings is visited and
    tested at the leaf. Position 0 is adjacent to position n-1, so for n = 1
    the single symbol is adjacent to itself.
    """
    if n < 1 or n > MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}")
    counts = [0] * (n + 1)
    s = [-1] * n
    last = n - 1
    i = 0
    while i >= 0:
        s[i] += 1
        if s[i] > 2:
            s[i] = -1
            i -= 1
            continue
        if prune and i > 0 and s[i] and s[i - 1]:
            continue
        if i < last:
            i += 1
            continue
        if s[last] and s[0]:
            continue
        if not prune:
            bad = False
            for j in range(last):
                if s[j] and s[j + 1]:
                    bad = True
                    break
            if bad:
                continue
        counts[s.count(2)] += 1
    return counts
