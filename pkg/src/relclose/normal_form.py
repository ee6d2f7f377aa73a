"""W-conjugation into normal form, and Hol(W)-conjugacy of normal forms.

A presentation ⟨a^k w^i, w^j⟩ is in normal form when for every prime p
dividing the order of w^i, that order beats both |w^j| and |[a^k, W]| at p.
Any presentation can be brought there by conjugating with a power of w and
trading the leading generator by elements of ⟨w^j⟩; both moves act on the
exponent i alone, one prime at a time, which is what to_normal_form does.

For presentations in normal form, conjugacy under the full holomorph of W
is decided by comparing the three generator orders (|a^k|, |w^i|, |w^j|).
"""

from .groups import DomainError, make_presentation
from .numtheory import factorize


def _val(x, p, cap):
    """min(v_p(x), cap), treating x modulo p^cap."""
    x %= p**cap
    if x == 0:
        return cap
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _crt(pairs):
    """x mod ∏m for x ≡ r (mod m) over pairwise-coprime moduli."""
    r, m = 0, 1
    for ri, mi in pairs:
        r += m * (((ri - r) * pow(m, -1, mi)) % mi)
        m *= mi
    return r % m


def to_normal_form(G, H):
    """Conjugate H by a power of w into normal form.

    Returns (H', u) where H' presents H^(w^u) in normal form.  Works one
    prime p | n at a time on the exponent i and recombines by CRT:

    * if |w^i|_p is nontrivial but at most |[a^k, W]|_p, a conjugation
      exponent u_p with i + u_p(1-beta) ≡ 0 (mod p-part of n) exists and
      kills the p-part;
    * if the surviving |w^i|_p is at most |w^j|_p, subtracting the right
      multiple of j kills it instead (a generator exchange inside H).

    Primes where neither bound holds are already strict and stay untouched.
    """
    H = make_presentation(G, H.k, H.i, H.j)  # revalidate defensively
    n = G.n
    if H.i == 0 or n == 1:
        return H, 0
    beta = H.beta
    fac = factorize(n)

    conj = []
    for p, ep in fac.items():
        mp = p**ep
        vi = _val(H.i, p, ep)
        vc = _val(beta - 1, p, ep)
        if vi >= ep or vi < vc:
            conj.append((0, mp))
            continue
        # solve u*(1-beta) ≡ -i (mod p^ep); both sides divisible by p^vc
        d = p**vc
        up = (-(H.i // d) * pow(((1 - beta) % mp) // d, -1, mp // d)) % (mp // d)
        conj.append((up, mp))
    u = _crt(conj)
    i1 = (H.i + u * (1 - beta)) % n

    shift = []
    for p, ep in fac.items():
        mp = p**ep
        vi = _val(i1, p, ep)
        vj = _val(H.j, p, ep)
        if vi >= ep or vi < vj:
            shift.append((0, mp))
            continue
        # solve s*j ≡ i1 (mod p^ep); exact because p^vj divides both
        d = p**vj
        sp = ((i1 // d) * pow((H.j // d) % (mp // d), -1, mp // d)) % (mp // d)
        shift.append((sp, mp))
    s = _crt(shift)
    i2 = (i1 - s * H.j) % n

    return make_presentation(G, H.k, i2, H.j), u


def is_normal_form(G, H):
    """True iff |w^i| beats |w^j| and |[a^k, W]| at every prime of |w^i|."""
    return make_presentation(G, H.k, H.i, H.j).normal_form


def hol_conjugate(G, H1, H2):
    """Decide whether two normal-form presentations are Hol(W)-conjugate.

    For normal forms this reduces to equality of the generator-order
    triples (|a^k|, |w^i|, |w^j|).
    """
    if not (H1.normal_form and H2.normal_form):
        raise DomainError("hol_conjugate requires both presentations in normal form")
    return H1.order_triple(G) == H2.order_triple(G)
