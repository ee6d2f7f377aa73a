"""Deterministic GF(p^d) construction and the ΓL₁(q) ambient model.

A field element is encoded as the integer Σ cᵢ pⁱ of its coefficient
vector (c₀, …, c_{d−1}) over the prime field.  Construction is fully
deterministic so downstream schemes are reproducible: both the modulus and
the primitive element are the lexicographically smallest choices, where
coefficient vectors are compared starting from the constant term.  Under
that rule the degree-1 modulus comes out as the polynomial x itself, which
makes prime fields plain modular arithmetic with no special casing.
"""

from dataclasses import dataclass
from itertools import product

from .groups import AmbientGroup, DomainError
from .numtheory import mult_order, prime_divisors

FIELD_BOUND = 1 << 16


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


# Polynomials over F_p are lists of coefficients, constant term first,
# with no trailing zeros.  These helpers are only used at build time.

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(p, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for s, ca in enumerate(a):
        if ca:
            for t, cb in enumerate(b):
                out[s + t] = (out[s + t] + ca * cb) % p
    return _trim(out)


def _poly_mod(p, a, f):
    a = list(a)
    top = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) > top:
        c = a[-1] * inv_lead % p
        if c:
            shift = len(a) - 1 - top
            for s, cf in enumerate(f):
                a[shift + s] = (a[shift + s] - c * cf) % p
        a.pop()
    return _trim(a)


def _poly_gcd(p, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(p, a, b)
    return a


def _poly_powmod(p, base, e, f):
    result = [1]
    acc = _poly_mod(p, base, f)
    while e:
        if e & 1:
            result = _poly_mod(p, _poly_mul(p, result, acc), f)
        acc = _poly_mod(p, _poly_mul(p, acc, acc), f)
        e >>= 1
    return result


def _is_irreducible(p, d, coeffs):
    """Monic f = x^d + Σ coeffs[s]·x^s irreducible over F_p.

    f is irreducible iff x^(p^d) ≡ x (mod f) and x^(p^(d/t)) − x is coprime
    to f for every prime t | d.
    """
    f = list(coeffs) + [1]
    x = [0, 1]
    if _poly_powmod(p, x, p**d, f) != _poly_mod(p, x, f):
        return False
    for t in prime_divisors(d):
        g = _poly_powmod(p, x, p ** (d // t), f)
        g = list(g) + [0] * max(0, 2 - len(g))
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(p, _trim(g), f)) != 1:
            return False
    return True


@dataclass(frozen=True)
class FiniteField:
    """GF(p^d) with exp/log tables over a fixed primitive element."""

    p: int
    d: int
    modulus: tuple  # low-degree-first coefficients of the monic modulus
    primitive: int  # encoded generator of the multiplicative group
    exp_table: tuple  # t -> primitive^t, length q−1
    log_table: tuple  # element -> t (None at index 0)

    @property
    def q(self):
        return self.p**self.d


def _encode(p, coeffs):
    e = 0
    for c in reversed(coeffs):
        e = e * p + c
    return e


def _decode(p, d, e):
    out = []
    for _ in range(d):
        out.append(e % p)
        e //= p
    return out


def gf_build(p, d):
    """Construct GF(p^d); deterministic modulus and primitive element."""
    if not _is_prime(p):
        raise DomainError(f"p={p} is not prime")
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    q = p**d
    if q > FIELD_BOUND:
        raise DomainError(f"field order {q} exceeds the bound {FIELD_BOUND}")

    modulus = None
    for coeffs in product(range(p), repeat=d):
        if _is_irreducible(p, d, coeffs):
            modulus = coeffs
            break
    f = list(modulus) + [1]

    def mul(u, v):
        prod = _poly_mul(p, _decode(p, d, u), _decode(p, d, v))
        return _encode(p, _poly_mod(p, prod, f))

    def elem_pow(u, e):
        acc, base = 1, u
        while e:
            if e & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            e >>= 1
        return acc

    cofactors = [(q - 1) // t for t in prime_divisors(q - 1)]
    primitive = None
    for coeffs in product(range(p), repeat=d):
        e = _encode(p, coeffs)
        if e and all(elem_pow(e, c) != 1 for c in cofactors):
            primitive = e
            break

    exp_table = []
    acc = 1
    for _ in range(q - 1):
        exp_table.append(acc)
        acc = mul(acc, primitive)
    log_table = [None] * q
    for t, e in enumerate(exp_table):
        log_table[e] = t

    return FiniteField(
        p=p,
        d=d,
        modulus=tuple(modulus),
        primitive=primitive,
        exp_table=tuple(exp_table),
        log_table=tuple(log_table),
    )


def gf_add(F, u, v):
    p = F.p
    out = 0
    scale = 1
    while u or v:
        out += (u % p + v % p) % p * scale
        u //= p
        v //= p
        scale *= p
    return out


def gf_neg(F, u):
    p = F.p
    out = 0
    scale = 1
    while u:
        out += -u % p * scale
        u //= p
        scale *= p
    return out


def gf_sub(F, u, v):
    return gf_add(F, u, gf_neg(F, v))


def gf_mul(F, u, v):
    if u == 0 or v == 0:
        return 0
    n = F.q - 1
    return F.exp_table[(F.log_table[u] + F.log_table[v]) % n]


def gamma_l1(F):
    """The ambient ⟨a, w⟩ with w a multiplicative generator and w^a = w^p."""
    n = F.q - 1
    G = AmbientGroup(n, F.p % n)
    assert G.a_ord == F.d, (F.p, F.d, G.a_ord)
    return G
