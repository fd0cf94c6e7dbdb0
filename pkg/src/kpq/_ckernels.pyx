# cython: language_level=3
"""Compiled twin of ``kpq._pykernels``; same API on 64-bit integers.

Callers must keep every coefficient and |discriminant| below 2**30, which
bounds all intermediates below 2**63.  ``kpq.kernels`` enforces this.
"""

ctypedef long long i64


cdef inline i64 _fdiv(i64 a, i64 b) nogil:
    cdef i64 q = a // b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i64 _fmod(i64 a, i64 b) nogil:
    cdef i64 r = a % b
    if r != 0 and ((r < 0) != (b < 0)):
        r += b
    return r


cdef inline i64 _xgcd(i64 a, i64 b, i64 *x, i64 *y) nogil:
    cdef i64 x0 = 1, x1 = 0, y0 = 0, y1 = 1, q, t
    while b != 0:
        q = _fdiv(a, b)
        t = b
        b = a - q * b
        a = t
        t = x1
        x1 = x0 - q * x1
        x0 = t
        t = y1
        y1 = y0 - q * y1
        y0 = t
    x[0] = x0
    y[0] = y0
    return a


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _reduce(i64 *a, i64 *b, i64 *c) nogil:
    cdef i64 disc = b[0] * b[0] - 4 * a[0] * c[0]
    cdef i64 t
    if not (-a[0] < b[0] <= a[0]):
        b[0] += 2 * a[0] * _fdiv(a[0] - b[0], 2 * a[0])
        c[0] = (b[0] * b[0] - disc) // (4 * a[0])
    while a[0] > c[0] or (a[0] == c[0] and b[0] < 0):
        t = a[0]
        a[0] = c[0]
        c[0] = t
        b[0] = -b[0]
        b[0] += 2 * a[0] * _fdiv(a[0] - b[0], 2 * a[0])
        c[0] = (b[0] * b[0] - disc) // (4 * a[0])


cdef inline void _compose(i64 a1, i64 b1, i64 c1, i64 a2, i64 b2, i64 c2,
                          i64 *a3, i64 *b3, i64 *c3) nogil:
    cdef i64 disc = b1 * b1 - 4 * a1 * c1
    cdef i64 t, s, n, y1, d, x2, y2, d1, v1, v2, r, dummy
    if a1 > a2:
        t = a1; a1 = a2; a2 = t
        t = b1; b1 = b2; b2 = t
        t = c1; c1 = c2; c2 = t
    s = _fdiv(b1 + b2, 2)
    n = b2 - s
    if a2 % a1 == 0:
        y1 = 0
        d = a1
    else:
        d = _xgcd(a2, a1, &y1, &dummy)
    if _fmod(s, d) == 0:
        x2 = 0
        y2 = -1
        d1 = d
    else:
        d1 = _xgcd(s, d, &x2, &y2)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = _fmod(_fmod(y1 * y2, v1) * _fmod(n, v1) - _fmod(x2, v1) * _fmod(c2, v1), v1)
    a3[0] = v1 * v2
    b3[0] = b2 + 2 * v2 * r
    b3[0] += 2 * a3[0] * _fdiv(a3[0] - b3[0], 2 * a3[0])
    c3[0] = (b3[0] * b3[0] - disc) // (4 * a3[0])
    _reduce(a3, b3, c3)


def reduce_form(i64 a, i64 b, i64 c):
    _reduce(&a, &b, &c)
    return a, b, c


def compose_forms(i64 a1, i64 b1, i64 c1, i64 a2, i64 b2, i64 c2):
    """Dirichlet composition (Cohen's Algorithm 5.4.7), reduced."""
    cdef i64 a3, b3, c3
    _compose(a1, b1, c1, a2, b2, c2, &a3, &b3, &c3)
    return a3, b3, c3


def reduced_forms(i64 disc):
    cdef list out = []
    cdef i64 b = disc & 1, nn, a, c
    while 3 * b * b <= -disc:
        nn = (b * b - disc) // 4
        a = b if b > 0 else 1
        while a * a <= nn:
            if nn % a == 0:
                c = nn // a
                if _gcd(_gcd(a, b), c) == 1:
                    out.append((a, b, c))
                    if b != 0 and a != b and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 2
    out.sort()
    return out


def count_reduced_forms(i64 disc):
    cdef i64 h = 0, b = disc & 1, nn, a, c
    with nogil:
        while 3 * b * b <= -disc:
            nn = (b * b - disc) // 4
            a = b if b > 0 else 1
            while a * a <= nn:
                if nn % a == 0:
                    c = nn // a
                    if _gcd(_gcd(a, b), c) == 1:
                        if b == 0 or a == b or a == c:
                            h += 1
                        else:
                            h += 2
                a += 1
            b += 2
    return h


def form_order(i64 a, i64 b, i64 c, i64 limit):
    """Least k >= 1 with f**k principal, or 0 if k would exceed ``limit``."""
    cdef i64 fa, fb, fc, ga, gb, gc, k = 1
    _reduce(&a, &b, &c)
    fa = a; fb = b; fc = c
    ga = a; gb = b; gc = c
    with nogil:
        while ga != 1:
            k += 1
            if k > limit:
                k = 0
                break
            _compose(ga, gb, gc, fa, fb, fc, &ga, &gb, &gc)
    return k
