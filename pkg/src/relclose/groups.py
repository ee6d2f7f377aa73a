"""Arithmetic model of the ambient group G = ⟨a⟩ ⋉ ⟨w⟩ acting on Z_n.

W = ⟨w⟩ is cyclic of order n and acts on itself by translation; the point set
is Z_n with points identified with w-exponents, and 0 is the stabilized
point.  A = ⟨a⟩ acts by w ↦ w^alpha, so a has order a_ord = mult_order(alpha, n)
and |G| = n * a_ord.  Group elements are plain tuples (k, e) standing for
a^k * w^e with 0 <= k < a_ord, 0 <= e < n; as a permutation such an element
sends the point v to v*alpha^k + e.

Subgroups are handled through two-generator presentations ⟨a^k w^i, w^j⟩
whose W-part ⟨w^j⟩ is exactly the intersection of the subgroup with W.  Every
subgroup of G has one (fold all generators' A-parts together with extended
Euclid and collect the pure-W leftovers), which is what
canonical_presentation does.
"""

from dataclasses import dataclass
from math import gcd

from .numtheory import (
    ext_gcd,
    hall_part,
    mult_order,
    p_part,
    prime_divisors,
    sigma_mod,
)


class DomainError(ValueError):
    """An argument violates an operation's stated domain."""


class ResourceLimit(RuntimeError):
    """An input exceeds a deliberate desk-scale bound."""


class AmbientGroup:
    """The group G = ⟨a, w⟩ with w of order n and w^a = w^alpha."""

    __slots__ = ("n", "alpha", "a_ord")

    def __init__(self, n, alpha):
        if n < 1:
            raise DomainError(f"n must be positive, got {n}")
        alpha %= n
        if gcd(alpha, n) != 1:
            raise DomainError(f"alpha={alpha} is not a unit modulo {n}")
        self.n = n
        self.alpha = alpha
        self.a_ord = mult_order(alpha, n)

    def order(self):
        return self.n * self.a_ord

    def identity(self):
        return (0, 0)

    def __eq__(self, other):
        return (
            isinstance(other, AmbientGroup)
            and self.n == other.n
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash((self.n, self.alpha))

    def __repr__(self):
        return f"AmbientGroup(n={self.n}, alpha={self.alpha})"


def elem_mul(G, g, h):
    """Product (a^k1 w^e1)(a^k2 w^e2) = a^(k1+k2) w^(e1*alpha^k2 + e2)."""
    k1, e1 = g
    k2, e2 = h
    return (
        (k1 + k2) % G.a_ord,
        (e1 * pow(G.alpha, k2, G.n) + e2) % G.n,
    )


def elem_inv(G, g):
    """Inverse of a^k w^e, namely a^(-k) w^(-e*alpha^(-k))."""
    k, e = g
    ki = (-k) % G.a_ord
    return (ki, (-e * pow(G.alpha, (G.a_ord - k) % G.a_ord, G.n)) % G.n)


def elem_pow(G, g, m):
    """g^m for any integer m, via (a^k w^e)^m = a^(km) w^(e*sigma(alpha^k, m))."""
    if m < 0:
        return elem_inv(G, elem_pow(G, g, -m))
    k, e = g
    beta = pow(G.alpha, k, G.n)
    return ((k * m) % G.a_ord, (e * sigma_mod(beta, m, G.n)) % G.n)


def elem_act(G, g, v):
    """Image of the point v under g = a^k w^e: v*alpha^k + e mod n."""
    k, e = g
    return (v * pow(G.alpha, k, G.n) + e) % G.n


def elem_order(G, g):
    """Order of g in G.

    With t = a_ord/gcd(a_ord, k) one has g^t = w^(e*sigma(alpha^k, t)), so the
    order is t times the order of that translation.
    """
    k, e = g
    t = G.a_ord // gcd(G.a_ord, k)
    w_exp = (e * sigma_mod(pow(G.alpha, k, G.n), t, G.n)) % G.n
    return t * (G.n // gcd(G.n, w_exp))


@dataclass(frozen=True)
class SubgroupPresentation:
    """Two-generator presentation H = ⟨a^k w^i, w^j⟩ with ⟨w^j⟩ = H ∩ W.

    k is stored as the canonical divisor gcd(k, a_ord) of a_ord, so that the
    A-projection ⟨a^k⟩ is read off directly (k = a_ord means it is trivial;
    k = 0 is accepted on input and lands there).  j | n, with j = n encoding
    the trivial intersection.  i stays a residue mod n — it is *not* reduced
    mod j here, because W-conjugation moves it around the coset i + ⟨j⟩ and
    beyond.  beta = alpha^k mod n is the action of the A-part on W, and
    normal_form records whether |x|_p > max(|y|_p, |[b,W]|_p) holds at every
    prime p dividing the order of x = w^i (computed eagerly, so the flag is
    never stale).
    """

    k: int
    i: int
    j: int
    beta: int
    normal_form: bool

    def order_triple(self, G):
        """(|b|, |x|, |y|) — the conjugacy invariant of a normal form."""
        return (
            G.a_ord // gcd(G.a_ord, self.k),
            G.n // gcd(G.n, self.i),
            G.n // self.j,
        )

    def subgroup_order(self, G):
        return (G.a_ord // gcd(G.a_ord, self.k)) * (G.n // self.j)

    def generators(self):
        """Generators as GroupElement tuples (the w^j one dropped if trivial)."""
        return [(self.k, self.i), (0, self.j)]


def make_presentation(G, k, i, j):
    """Validated SubgroupPresentation for ⟨a^k w^i, w^j⟩.

    Raises DomainError unless j | n and ⟨w^j⟩ really is the full intersection
    of the subgroup with W, i.e. gcd(n, j, i*sigma(beta, t)) = j for
    t = a_ord/gcd(a_ord, k).
    """
    n, a_ord = G.n, G.a_ord
    k = gcd(k, a_ord)  # 0 lands on a_ord, the trivial-projection encoding
    i %= n
    if j < 1 or n % j != 0:
        raise DomainError(f"j={j} is not a positive divisor of n={n}")
    beta = pow(G.alpha, k, n)
    t = a_ord // k
    if gcd(gcd(n, j), i * sigma_mod(beta, t, n)) != j:
        raise DomainError(
            f"⟨w^{j}⟩ is not the W-intersection of ⟨a^{k} w^{i}, w^{j}⟩ in {G!r}"
        )
    return SubgroupPresentation(k, i, j, beta, _normal_form_holds(G, i, j, beta))


def _normal_form_holds(G, i, j, beta):
    n = G.n
    if i == 0:
        return True
    x_ord = n // gcd(n, i)
    y_ord = n // j
    c_ord = n // gcd(n, beta - 1)  # |[b, W]| with [b, W] = ⟨w^(beta-1)⟩
    for p in prime_divisors(x_ord):
        if p_part(x_ord, p) <= max(p_part(y_ord, p), p_part(c_ord, p)):
            return False
    return True


def canonical_presentation(G, gens):
    """Fold arbitrary generators into the canonical ⟨a^k w^i, w^j⟩ form.

    Runs extended Euclid on the A-part exponents: the leader element h keeps
    the gcd-so-far as its A-part, and every generator (and displaced leader)
    contributes its pure-W residue to the intersection.  The W-exponent of
    the leader is finally reduced mod j, which makes the output triple
    independent of generator order.
    """
    if not gens:
        raise DomainError("canonical_presentation needs at least one generator")
    n, a_ord = G.n, G.a_ord
    d, e_d = a_ord, 0  # leader a^d w^(e_d); d = a_ord encodes trivial A-part
    w_exps = [0]
    for g in gens:
        kg = g[0] % a_ord
        eg = g[1] % n
        g = (kg, eg)
        if kg % d == 0:
            # A-part already inside ⟨a^d⟩: peel off a leader power
            w_exps.append(elem_mul(G, g, elem_pow(G, (d % a_ord, e_d), -(kg // d)))[1])
            continue
        # u*d + v*kg = d2 exactly; d | a_ord keeps every gcd a divisor of a_ord
        d2, u, v = ext_gcd(d, kg)
        leader = (d % a_ord, e_d)
        new_leader = elem_mul(G, elem_pow(G, leader, u), elem_pow(G, g, v))
        # residues of the old leader and of g against the new one are pure W
        w_exps.append(elem_mul(G, leader, elem_pow(G, new_leader, -(d // d2)))[1])
        w_exps.append(elem_mul(G, g, elem_pow(G, new_leader, -(kg // d2)))[1])
        d, e_d = d2, new_leader[1]
    beta = pow(G.alpha, d, n)
    t = a_ord // d
    j = gcd(n, (e_d * sigma_mod(beta, t, n)) % n)
    for w in w_exps:
        j = gcd(j, w)
    return make_presentation(G, d, e_d % j, j)


def subgroup_contains(G, H, g):
    """Membership test by exponent arithmetic.

    The A-part of g must lie in ⟨a^k⟩; dividing off the matching power of
    a^k w^i must leave a W-part inside ⟨w^j⟩.
    """
    kg, eg = g
    kg %= G.a_ord
    k = H.k % G.a_ord
    if k == 0:
        if kg != 0:
            return False
        m = 0
    else:
        if kg % H.k != 0:
            return False
        m = kg // H.k
    rest = (eg - H.i * sigma_mod(H.beta, m, G.n)) % G.n
    return rest % H.j == 0


def subgroup_equal(G, H1, H2):
    """Whether two presentations denote the same subgroup of G."""
    return H1.k == H2.k and H1.j == H2.j and (H1.i - H2.i) % H1.j == 0


def conjugate_by_w(G, H, u):
    """Presentation of H^(w^u): only the coset exponent moves, by u*(1-beta)."""
    return make_presentation(G, H.k, (H.i + u * (1 - H.beta)) % G.n, H.j)


def hol_transform(G, g, u, c):
    """Conjugate g ∈ G by the holomorph element v ↦ u*v + c (u a unit mod n).

    (k, e) goes to (k, u*e + c*(1 - alpha^k)); this is how Hol(W) acts on G
    for conjugacy tests, without ever materializing Hol(W) itself.
    """
    k, e = g
    return (k, (u * e + c * (1 - pow(G.alpha, k, G.n))) % G.n)


@dataclass(frozen=True)
class StructureData:
    """Derived structural constants of a presentation.

    V is the Hall part of W over the primes p | n where beta is not 1 mod p,
    U the complement; W̄ = W/(H∩W) has order j and V̄ is its V-primes part.
    l is the order of beta acting on V̄.  The automorphism c ↦ c^beta of a
    cyclic group is "negative" when the group order is divisible by 4 and
    beta ≡ 3 (mod 4).
    """

    v_order: int
    u_order: int
    wbar_order: int
    vbar_order: int
    l: int
    b_negative_on_W: bool
    b_negative_on_Wbar: bool


def structure_data(G, H):
    n, beta, j = G.n, H.beta, H.j
    v_primes = [p for p in prime_divisors(n) if (beta - 1) % p != 0]
    v_order = hall_part(n, v_primes)
    vbar_order = hall_part(j, v_primes)
    return StructureData(
        v_order=v_order,
        u_order=n // v_order,
        wbar_order=j,
        vbar_order=vbar_order,
        l=mult_order(beta, vbar_order),
        b_negative_on_W=(n % 4 == 0 and beta % 4 == 3),
        b_negative_on_Wbar=(j % 4 == 0 and beta % 4 == 3),
    )
