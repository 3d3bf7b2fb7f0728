"""Pure-Python kernels. Same signatures and results as the compiled ``_ckernels``.

Layout conventions shared with the compiled module:

* ``table`` is a flat sequence of ints, ``table[(g * n + a) * n + b]`` is the
  index of ``a g b``.
* subsets are membership words: bit ``i`` set means element ``i`` is a member.
* ``pm`` is the n*n "pair mask" table, ``pm[a * n + b]`` is the mask of
  ``{a g b : g in Gamma}``.
"""

from array import array

BACKEND = "python"


def product_table(table, n, m):
    pm = array("Q", bytes(8 * n * n))
    for g in range(m):
        base = g * n * n
        for ab in range(n * n):
            pm[ab] |= 1 << table[base + ab]
    return pm


def set_product(pm, n, A, B):
    out = 0
    a = 0
    while A:
        if A & 1:
            row = a * n
            bb = B
            b = 0
            while bb:
                if bb & 1:
                    out |= pm[row + b]
                bb >>= 1
                b += 1
        A >>= 1
        a += 1
    return out


def approximations(images, n_src, B):
    lower = upper = 0
    for x in range(n_src):
        img = images[x]
        if img & ~B == 0:
            lower |= 1 << x
        if img & B:
            upper |= 1 << x
    return lower, upper


def all_approximations(images, n_src, n_tgt):
    size = 1 << n_tgt
    lowers = array("Q", bytes(8 * size))
    uppers = array("Q", bytes(8 * size))
    for B in range(size):
        lowers[B], uppers[B] = approximations(images, n_src, B)
    return lowers, uppers


def associativity_failures(table, n, m, limit=-1):
    """All (a, alpha, b, beta, c, left, right) with (a alpha b) beta c != a alpha (b beta c)."""
    out = []
    nn = n * n
    for a in range(n):
        for g1 in range(m):
            for b in range(n):
                ab = table[g1 * nn + a * n + b]
                for g2 in range(m):
                    for c in range(n):
                        left = table[g2 * nn + ab * n + c]
                        right = table[g1 * nn + a * n + table[g2 * nn + b * n + c]]
                        if left != right:
                            out.append((a, g1, b, g2, c, left, right))
                            if 0 <= limit <= len(out):
                                return out
    return out


def anti_product(table, n, g, left_set, right_set):
    """Mask of {v g u : v in left_set, u in right_set}."""
    out = 0
    base = g * n * n
    v = 0
    lv = left_set
    while lv:
        if lv & 1:
            row = base + v * n
            u = 0
            ru = right_set
            while ru:
                if ru & 1:
                    out |= 1 << table[row + u]
                ru >>= 1
                u += 1
        lv >>= 1
        v += 1
    return out


def antihom_scan(src_table, n1, tgt_table, n2, m, images):
    """Classify a set-valued map against T(a g b) >= T(b) g T(a).

    Returns ``(level, plain_witness, strong_witness)`` with level 0 (none),
    1 (plain) or 2 (strong). ``plain_witness`` is ``(a, g, b, offending)``
    for the first triple where inclusion fails; ``strong_witness`` is
    ``(a, g, b)`` for the first triple where equality fails.
    """
    plain_w = None
    strong_w = None
    nn = n1 * n1
    for a in range(n1):
        for g in range(m):
            for b in range(n1):
                rhs = anti_product(tgt_table, n2, g, images[b], images[a])
                lhs = images[src_table[g * nn + a * n1 + b]]
                if rhs != lhs:
                    if strong_w is None:
                        strong_w = (a, g, b)
                    extra = rhs & ~lhs
                    if extra:
                        low = (extra & -extra).bit_length() - 1
                        return 0, (a, g, b, low), strong_w
    if strong_w is None:
        return 2, None, None
    return 1, None, strong_w


def prime_witness(table, n, m, A):
    """First (x, g, y) with x g y in A but x, y not in A, else None."""
    nn = n * n
    for x in range(n):
        if A >> x & 1:
            continue
        for g in range(m):
            row = g * nn + x * n
            for y in range(n):
                if A >> y & 1:
                    continue
                if A >> table[row + y] & 1:
                    return (x, g, y)
    return None
