"""Integer arithmetic helpers used throughout the package.

Everything here works with plain Python ints.  Residues are always kept
canonical in [0, m); functions that return "the p-part" of an integer return
the actual power of p, not the exponent.  Factorization is plain trial
division: every input in this package is tiny (at most a few million).
"""

from math import gcd


def factorize(m):
    """Return the prime factorization of m >= 1 as a dict {prime: exponent}."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_divisors(m):
    """Sorted list of the distinct primes dividing m."""
    return sorted(factorize(m))


def divisors(m):
    """Sorted list of all positive divisors of m."""
    divs = [1]
    for p, e in factorize(m).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def ext_gcd(a, b):
    """Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def p_part(m, p):
    """Largest power of the prime p dividing m (so p_part(40, 2) == 8).

    By convention p_part(m, p) == 1 when p does not divide m.
    """
    if m < 1:
        raise ValueError("p_part expects a positive integer")
    part = 1
    while m % p == 0:
        part *= p
        m //= p
    return part


def hall_part(m, primes):
    """Product of the p-parts of m over the given set of primes.

    hall_part(24, {3}) == 3; the complement is m // hall_part(m, primes).
    """
    part = 1
    for p in set(primes):
        part *= p_part(m, p)
    return part


def coprime_part(m, k):
    """Largest divisor of m coprime to k."""
    g = gcd(m, k)
    while g > 1:
        m //= g
        g = gcd(m, k)
    return m


def additive_order(e, m):
    """Order of the residue e in the additive group Z_m."""
    if m < 1:
        _raise_modulus(m)
    return m // gcd(m, e)


def _raise_modulus(m):
    raise ValueError(f"modulus must be positive, got {m}")


def mult_order(b, m):
    """Multiplicative order of b modulo m; requires gcd(b, m) == 1.

    The trivial group gets the natural convention mult_order(b, 1) == 1.
    """
    if m < 1:
        _raise_modulus(m)
    if m == 1:
        return 1
    b %= m
    if gcd(b, m) != 1:
        raise ValueError(f"{b} is not a unit modulo {m}")
    order, acc = 1, b
    while acc != 1:
        acc = acc * b % m
        order += 1
    return order


def sigma_mod(b, t, m):
    """1 + b + b^2 + ... + b^(t-1) reduced modulo m, for any t >= 0.

    Computed by halving (sigma(b, 2t) = sigma(b, t) * (1 + b^t)) so it never
    divides by b - 1, which need not be invertible modulo m.
    """
    if m < 1:
        _raise_modulus(m)
    if t < 0:
        raise ValueError("sigma_mod expects t >= 0")
    if m == 1:
        return 0
    b %= m
    if t == 0:
        return 0
    if t % 2:
        return (sigma_mod(b, t - 1, m) + pow(b, t - 1, m)) % m
    return sigma_mod(b, t // 2, m) * (1 + pow(b, t // 2, m)) % m


def lifted_power_p_part(n, m, r):
    """The r-part of n**m - 1, for a prime r dividing n - 1 (n >= 2, m >= 1).

    Closed form, no big powers: the r-part of n**m - 1 equals the r-part of
    n - 1 times the r-part of m, except when r == 2, m is even and
    n = 3 (mod 4), where it is the 2-part of n + 1 times the 2-part of m.
    """
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    if (n - 1) % r != 0:
        raise ValueError(f"{r} must divide n - 1 = {n - 1}")
    if r == 2 and m % 2 == 0 and n % 4 == 3:
        return p_part(n + 1, 2) * p_part(m, 2)
    return p_part(n - 1, r) * p_part(m, r)
