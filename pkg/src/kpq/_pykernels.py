"""Pure-Python form arithmetic; also the fallback when the extension is not built.

Forms are plain ``(a, b, c)`` tuples here.  Validation lives in
:mod:`kpq.quadforms`; these routines assume positive-definite input of a
single discriminant.
"""


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def reduce_form(a, b, c):
    disc = b * b - 4 * a * c
    if not -a < b <= a:
        b += 2 * a * ((a - b) // (2 * a))
        c = (b * b - disc) // (4 * a)
    while a > c or (a == c and b < 0):
        a, b = c, -b
        b += 2 * a * ((a - b) // (2 * a))
        c = (b * b - disc) // (4 * a)
    return a, b, c


def compose_forms(a1, b1, c1, a2, b2, c2):
    """Dirichlet composition (Cohen's Algorithm 5.4.7), reduced."""
    disc = b1 * b1 - 4 * a1 * c1
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, y1, _ = _xgcd(a2, a1)
    if s % d == 0:
        x2, y2, d1 = 0, -1, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    a3 = v1 * v2
    b3 = b2 + 2 * v2 * r
    c3 = (b3 * b3 - disc) // (4 * a3)
    return reduce_form(a3, b3, c3)


def _gcd3(a, b, c):
    while b:
        a, b = b, a % b
    while c:
        a, c = c, a % c
    return a


def reduced_forms(disc):
    """All reduced primitive forms of the negative discriminant ``disc``, sorted."""
    out = []
    b = disc & 1
    while 3 * b * b <= -disc:
        nn = (b * b - disc) // 4
        a = b if b > 0 else 1
        while a * a <= nn:
            if nn % a == 0:
                c = nn // a
                if _gcd3(a, b, c) == 1:
                    out.append((a, b, c))
                    if b and a != b and a != c:
                        out.append((a, -b, c))
            a += 1
        b += 2
    out.sort()
    return out


def count_reduced_forms(disc):
    h = 0
    b = disc & 1
    while 3 * b * b <= -disc:
        nn = (b * b - disc) // 4
        a = b if b > 0 else 1
        while a * a <= nn:
            if nn % a == 0:
                c = nn // a
                if _gcd3(a, b, c) == 1:
                    h += 1 if (b == 0 or a == b or a == c) else 2
            a += 1
        b += 2
    return h


def form_order(a, b, c, limit):
    """Least k >= 1 with f**k principal, or 0 if k would exceed ``limit``."""
    disc = b * b - 4 * a * c
    f = reduce_form(a, b, c)
    g = f
    k = 1
    while g[0] != 1:
        k += 1
        if k > limit:
            return 0
        g = compose_forms(g[0], g[1], g[2], f[0], f[1], f[2])
    return k
