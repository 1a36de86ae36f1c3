# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Mirrors pfsym._pure: double-precision pfaffian summation over all perfect
matchings, and the generator-action classifier driving the brute-force
symmetry search.  Sizes are capped at 16 points (120 upper entries), so
all scratch space lives on the stack.
"""


cdef inline int _idx(int m, int i, int j) nogil:
    # lexicographic rank of the 0-based pair (i, j), i < j < m
    return i * (2 * m - i - 1) // 2 + (j - i - 1)


cdef double _pf_rec(int m, double* a, unsigned int mask) nogil:
    cdef int i, j, sgn
    cdef unsigned int rest
    cdef double total, term
    if mask == 0:
        return 1.0
    i = 0
    while not (mask >> i) & 1u:
        i += 1
    rest = mask & ~(1u << i)
    total = 0.0
    sgn = 1
    for j in range(i + 1, m):
        if (rest >> j) & 1u:
            term = a[_idx(m, i, j)] * _pf_rec(m, a, rest & ~(1u << j))
            if sgn == 1:
                total += term
            else:
                total -= term
            sgn = -sgn
    return total


def pf_double(int two_n, packed):
    """Pfaffian of the packed upper triangle, in doubles."""
    cdef double a[120]
    cdef int k, npairs
    cdef double result
    cdef unsigned int mask
    if two_n < 0 or two_n % 2 != 0 or two_n > 16:
        raise ValueError(f"two_n must be even and in 0..16, got {two_n}")
    npairs = two_n * (two_n - 1) // 2
    if len(packed) != npairs:
        raise ValueError(f"expected {npairs} packed entries, got {len(packed)}")
    if two_n == 0:
        return 1.0
    for k in range(npairs):
        a[k] = packed[k]
    mask = (1u << two_n) - 1u
    with nogil:
        result = _pf_rec(two_n, a, mask)
    return result


cdef int _classify_leaf(int m, int* q, bint skew, int* pu, int* pv, int n,
                        int sgn, int* target) nogil:
    cdef int iu[8]
    cdef int iv[8]
    cdef int flat[16]
    cdef int flip = 1
    cdef int k, u, v, key_u, key_v, r, x, y, inv, t
    for k in range(n):
        u = q[pu[k]]
        v = q[pv[k]]
        if u > v:
            u, v = v, u
            if skew:
                flip = -flip
        iu[k] = u
        iv[k] = v
    # insertion sort of the image pairs by first element
    for k in range(1, n):
        key_u = iu[k]
        key_v = iv[k]
        r = k - 1
        while r >= 0 and iu[r] > key_u:
            iu[r + 1] = iu[r]
            iv[r + 1] = iv[r]
            r -= 1
        iu[r + 1] = key_u
        iv[r + 1] = key_v
    for k in range(n):
        flat[2 * k] = iu[k]
        flat[2 * k + 1] = iv[k]
    inv = 0
    for x in range(2 * n):
        for y in range(x + 1, 2 * n):
            if flat[x] > flat[y]:
                inv += 1
    t = sgn * flip * (-1 if inv & 1 else 1)
    if target[0] == 0:
        target[0] = t
        return 0
    return 0 if t == target[0] else 1


cdef int _classify_rec(int m, int* q, bint skew, unsigned int mask, int sgn,
                       int* pu, int* pv, int depth, int* target) nogil:
    # returns 1 as soon as the action stops being proportional to the pfaffian
    cdef int i, j, s
    cdef unsigned int rest
    if mask == 0:
        return _classify_leaf(m, q, skew, pu, pv, depth, sgn, target)
    i = 0
    while not (mask >> i) & 1u:
        i += 1
    rest = mask & ~(1u << i)
    s = sgn
    for j in range(i + 1, m):
        if (rest >> j) & 1u:
            pu[depth] = i
            pv[depth] = j
            if _classify_rec(m, q, skew, rest & ~(1u << j), s, pu, pv, depth + 1, target):
                return 1
            s = -s
    return 0


def classify_pf_action(int two_n, inv_images, bint skew):
    """Effect of a generator relabeling on the generic pfaffian.

    Same contract as pfsym._pure.classify_pf_action: +1 fixed, -1 negated,
    0 neither; `inv_images` is the 0-based inverse permutation.
    """
    cdef int q[16]
    cdef int pu[8]
    cdef int pv[8]
    cdef int target = 0
    cdef int k, aborted
    cdef unsigned int mask
    if two_n < 2 or two_n % 2 != 0 or two_n > 12:
        raise ValueError(f"two_n must be even and in 2..12, got {two_n}")
    if len(inv_images) != two_n or sorted(inv_images) != list(range(two_n)):
        raise ValueError("inv_images must be a 0-based permutation")
    for k in range(two_n):
        q[k] = inv_images[k]
    mask = (1u << two_n) - 1u
    with nogil:
        aborted = _classify_rec(two_n, q, skew, mask, 1, pu, pv, 0, &target)
    return 0 if aborted else target
