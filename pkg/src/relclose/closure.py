"""Radical, relative closedness, and relative closure of subgroups.

The radical of a subgroup H ≤ G is the group of translations preserving
every H-orbit on Z_n; it is always of the form ⟨w^{j_R}⟩ and these routines
compute j_R by formula.  H is relatively closed when it already equals the
full setwise stabilizer of its own orbit partition, and the relative
closure is that stabilizer: H enlarged by its radical and by the part of
⟨a⟩ acting trivially on W modulo the radical.

Everything here takes the arithmetic route through the presentation
exponents; the matching definition-level computations live in oracle.py.
"""

from math import gcd

from .groups import (
    DomainError,
    canonical_presentation,
    make_presentation,
    structure_data,
    subgroup_contains,
)
from .normal_form import to_normal_form
from .numtheory import mult_order, sigma_mod


def radical(G, H):
    """Exponent j_R with rad(H) = ⟨w^{j_R}⟩, for H in normal form.

    The radical is generated by y = w^j together with x^{σ(β, L)}, where
    L = l ordinarily and L = 2l when the leading generator inverts the
    2-part of W̄ = W/⟨w^j⟩ and l is odd.
    """
    if not H.normal_form:
        raise DomainError("radical requires a normal-form presentation")
    sd = structure_data(G, H)
    L = 2 * sd.l if (sd.b_negative_on_Wbar and sd.l % 2 == 1) else sd.l
    return gcd(gcd(G.n, H.j), H.i * sigma_mod(H.beta, L, G.n))


def is_relatively_closed(G, H):
    """Decide whether H equals the stabilizer of its own orbit partition.

    Arithmetic test, for H = ⟨a^k w^i, w^j⟩ in normal form with
    m = mult_order(α, j):

      (1) ⟨a^m⟩ ≤ ⟨a^k⟩, i.e. k | gcd(m, a_ord), and
      (2) i·σ(β, L) ≡ 0 (mod j) with L as in `radical` — equivalently,
          rad(H) = H ∩ W.  (Shorthands like i·l ≡ 0 or i·(β+1)·l ≡ 0 pick
          the wrong 2-part when the leading generator inverts the 2-part of
          W̄ but l is even, so the σ form is used throughout.)

    The structural characterization — rad(H) = H ∩ W together with H
    containing the kernel ⟨a^m⟩ of A's action on W̄ — is evaluated too and
    must agree; disagreement would mean an internal fault, not bad input.
    """
    if not H.normal_form:
        raise DomainError("is_relatively_closed requires a normal-form presentation")
    sd = structure_data(G, H)
    m = mult_order(G.alpha, H.j)
    cond1 = gcd(m, G.a_ord) % H.k == 0
    L = 2 * sd.l if (sd.b_negative_on_Wbar and sd.l % 2 == 1) else sd.l
    cond2 = (H.i * sigma_mod(H.beta, L, G.n)) % H.j == 0
    arithmetic = cond1 and cond2

    structural = radical(G, H) == H.j and subgroup_contains(
        G, H, (m % G.a_ord, 0)
    )
    assert arithmetic == structural, (G, H, arithmetic, structural)
    return arithmetic


def relative_closure(G, H):
    """Presentation of the largest subgroup with the same orbits as H.

    The closure is H·rad(H)·C_A(W/rad(H)): adjoin w^{j_R} and the power of
    a that centralizes W modulo the radical, then re-canonicalize.  The
    radical is computed on the normal form but is unchanged by
    W-conjugation, so the original generators can be kept.
    """
    Hn, _ = to_normal_form(G, H)
    j_r = radical(G, Hn)
    m_r = mult_order(G.alpha, j_r)
    return canonical_presentation(
        G,
        [(H.k % G.a_ord, H.i), (0, j_r % G.n), (m_r % G.a_ord, 0)],
    )


def kernel_of_quotient_action(G, N):
    """The kernel K_N = ⟨w^N⟩·C_A(W/⟨w^N⟩) of G acting on W/⟨w^N⟩."""
    if N <= 0 or G.n % N != 0:
        raise DomainError(f"N = {N} is not a divisor of n = {G.n}")
    m = mult_order(G.alpha, N)
    return canonical_presentation(G, [(m % G.a_ord, 0), (0, N % G.n)])
