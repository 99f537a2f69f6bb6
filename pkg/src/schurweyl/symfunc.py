"""Schur polynomials at a spectrum and shifted Schur functions at a partition.

Ordinary Schur values use the bialternant ratio of determinants when the
spectrum entries are pairwise distinct (exact for rational input) and fall
back to the semistandard-tableau monomial sum when entries repeat, which
avoids 0/0 without perturbation tricks.  The tableau sum doubles as the
independent oracle for small shapes.

Shifted Schur values use the ratio of factorial determinants
det[(lam_i + d - i) falling (mu_j + d - j)] / det[(lam_i + d - i) falling (d - j)],
all in exact integer arithmetic.  The normalization is pinned by the exact
identity f_lam * s*_mu(lam) / (n falling k) = dim lam/mu, which the test
suite enforces rather than assumes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .partitions import Partition, rows

Spectrum = Sequence


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _det(m: list[list]) -> object:
    """Determinant by Gaussian elimination with max-|pivot| pivoting.

    Works over any field the entries live in (Fraction or float here).
    """
    a = [row[:] for row in m]
    size = len(a)
    det = 1
    for col in range(size):
        pivot = max(range(col, size), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            return 0 * det
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv_rows = a[col]
        for r in range(col + 1, size):
            factor = a[r][col] / inv_rows[col]
            if factor == 0:
                continue
            a[r] = [x - factor * y for x, y in zip(a[r], inv_rows)]
    return det


def semistandard_tableaux(shape: Partition, d: int) -> Iterator[tuple[int, ...]]:
    """Yield the content of each semistandard filling of `shape` with entries 1..d.

    Rows weakly increase, columns strictly increase.  Only the content
    vector (count of each entry) is surfaced; that is all the monomial sum
    needs.
    """
    if rows(shape) > d:
        return
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    filling = [[0] * shape[r] for r in range(len(shape))]
    content = [0] * (d + 1)

    def fill(idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(cells):
            yield tuple(content[1:])
            return
        r, c = cells[idx]
        lo = filling[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, filling[r - 1][c] + 1)
        for v in range(lo, d + 1):
            filling[r][c] = v
            content[v] += 1
            yield from fill(idx + 1)
            content[v] -= 1
            filling[r][c] = 0

    yield from fill(0)


def schur_eval_tableau(mu: Partition, r: Spectrum):
    """s_mu(r) as the monomial sum over semistandard tableaux."""
    d = len(r)
    total = 0
    for content in semistandard_tableaux(mu, d):
        term = 1
        for i, count in enumerate(content):
            if count:
                term *= r[i] ** count
        total += term
    return total


def schur_eval(mu: Partition, r: Spectrum):
    """Schur polynomial s_mu evaluated at the spectrum r.

    Zero when mu has more rows than r has entries.  Distinct entries take
    the bialternant route; repeated entries take the tableau sum.
    """
    d = len(r)
    if rows(mu) > d:
        return 0
    if d == 0:
        return 1  # empty shape on the empty alphabet
    vals = [Fraction(x) if isinstance(x, int) else x for x in r]
    if len(set(vals)) != d:
        return schur_eval_tableau(mu, vals)
    padded = list(mu) + [0] * (d - len(mu))
    num = _det([[vals[i] ** (padded[j] + d - 1 - j) for j in range(d)] for i in range(d)])
    den = _det([[vals[i] ** (d - 1 - j) for j in range(d)] for i in range(d)])
    return num / den


def shifted_schur_eval(mu: Partition, lam: Partition, d: int) -> Fraction:
    """Shifted Schur function s*_mu(lam), exact.

    d may be any integer >= the row counts of both diagrams; the value does
    not depend on the choice.
    """
    if d < rows(mu) or d < rows(lam):
        raise ValueError("d must cover the rows of both diagrams")
    if d == 0:
        return Fraction(1)
    a = [lam[i] + d - 1 - i if i < len(lam) else d - 1 - i for i in range(d)]
    m = [mu[j] + d - 1 - j if j < len(mu) else d - 1 - j for j in range(d)]
    num = _det([[Fraction(falling_factorial(a[i], m[j])) for j in range(d)] for i in range(d)])
    den = _det([[Fraction(falling_factorial(a[i], d - 1 - j)) for j in range(d)] for i in range(d)])
    return Fraction(num, den) if isinstance(num, int) else num / den
