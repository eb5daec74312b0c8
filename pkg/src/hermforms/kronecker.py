"""Kronecker product of forms over a Tambara functor."""

from __future__ import annotations

from constructions.matrix import matrix_layout
from exactalg.errors import NotTambara
from hermforms.forms import HermForm, Isometry, block_sum, permutation_matrix


def kronecker_product(b: HermForm, b2: HermForm) -> HermForm:
    """``(B⊗B')_ii = B_kk·B'_uu`` on the diagonal and ``R(B)_kl·R(B')_uv`` above it.

    Index ``i`` of the product splits as ``k = i // m``, ``u = i % m`` with m = dim B'.
    """
    if b.base is not b2.base:
        raise ValueError("Kronecker product needs forms over the same functor")
    t = b.base.tambara
    if t is None:
        raise NotTambara(f"{b.base} carries no Tambara structure")
    n, m = b.n, b2.n
    size = n * m
    r1, r2 = b.restriction(), b2.restriction()
    d1, d2 = b.diagonal, b2.diagonal
    ring, fix_ring = t.under_ring, t.fix_ring
    layout = matrix_layout(b.base, size)
    upper = {}
    for i, j in layout.pairs:
        k, u = divmod(i, m)
        l, v = divmod(j, m)
        upper[(i, j)] = ring.mul(r1[k, l], r2[u, v])
    diag = [fix_ring.mul(d1[i // m], d2[i % m]) for i in range(size)]
    return HermForm(b.base, size, layout.join(upper, diag))


def kronecker_pattern(n: int, m: int) -> dict[tuple[int, int], str]:
    """Symbolic entries of ``B⊗B'`` on and above the diagonal, 1-based.

    Entries below the diagonal of R(B) appear as ``w(B_lk)``.
    """

    def entry(name: str, a: int, c: int) -> str:
        if a <= c:
            return f"{name}{a + 1}{c + 1}"
        return f"w({name}{c + 1}{a + 1})"

    pattern = {}
    for i in range(n * m):
        for j in range(i, n * m):
            k, u = divmod(i, m)
            l, v = divmod(j, m)
            pattern[(i + 1, j + 1)] = entry("B", k, l) + "*" + entry("B'", u, v)
    return pattern


def distributivity_permutation(n: int, m1: int, m2: int) -> list[int]:
    """σ with ``(B⊗B')⊕(B⊗B'')`` reindexed to ``B⊗(B'⊕B'')``.

    Position ``k(m1+m2) + u`` on the right is ``σ`` of its position on the left.
    """
    m = m1 + m2
    sigma = [0] * (n * m)
    for k in range(n):
        for u in range(m1):
            sigma[k * m1 + u] = k * m + u
        for u in range(m2):
            sigma[n * m1 + k * m2 + u] = k * m + m1 + u
    return sigma


def distributivity_isometry(b: HermForm, b2: HermForm, b3: HermForm) -> Isometry:
    """``B⊗(B'⊕B'') → (B⊗B')⊕(B⊗B'')``, a permutation isometry."""
    left = kronecker_product(b, block_sum(b2, b3))
    right = block_sum(kronecker_product(b, b2), kronecker_product(b, b3))
    sigma = distributivity_permutation(b.n, b2.n, b3.n)
    inverse = [0] * len(sigma)
    for a, s in enumerate(sigma):
        inverse[s] = a
    return Isometry(permutation_matrix(b.base, inverse), left, right)
