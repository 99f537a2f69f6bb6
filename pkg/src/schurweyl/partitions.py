"""Integer partitions viewed as Young diagrams, cycle types and highest weights.

A partition is stored as a trimmed tuple of weakly decreasing positive
integers; the empty tuple is the unique partition of 0.  Trimmed tuples are
canonical, so they can be used directly as dict keys and cache keys.
Comparisons that need equal lengths zero-pad on the fly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Validate and canonicalize an iterable of row lengths.

    Raises ValueError unless the rows are weakly decreasing positive
    integers (trailing zeros are tolerated and trimmed).
    """
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for i, p in enumerate(t):
        if p < 1:
            raise ValueError(f"partition rows must be positive, got {t}")
        if i + 1 < len(t) and t[i + 1] > p:
            raise ValueError(f"partition rows must be weakly decreasing, got {t}")
    return t


def size(lam: Partition) -> int:
    """Number of boxes |lambda|."""
    return sum(lam)


def rows(lam: Partition) -> int:
    """Number of rows; as a cycle type this is the cycle count c(lambda)."""
    return len(lam)


def partitions_of(n: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of n with at most max_rows rows, lexicographically decreasing.

    max_rows=None means unbounded.  n = 0 yields only the empty partition.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_rows is None:
        max_rows = n
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int, room: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if room == 0:
            return
        # largest feasible next row first gives the lex-decreasing order
        for part in range(min(cap, remaining), 0, -1):
            # even taking `part` in every remaining row must reach `remaining`
            if part * room < remaining:
                break
            prefix.append(part)
            extend(prefix, remaining - part, part, room - 1)
            prefix.pop()

    extend([], n, n, max_rows)
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram (rows and columns interchanged)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff mu fits inside lam row-wise (mu_i <= lam_i, zero-padded)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def class_size(alpha: Partition) -> int:
    """Size of the conjugacy class of S_n with cycle type alpha.

    h_alpha = n! / z_alpha with z_alpha = prod_i i^{m_i} m_i! over the
    multiplicities m_i of the part sizes i.
    """
    n = sum(alpha)
    z = 1
    mult: dict[int, int] = {}
    for part in alpha:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return factorial(n) // z


def skew_standard_count(outer: Partition, inner: Partition) -> int:
    """Number of standard fillings of the skew diagram outer/inner.

    Counted by depth-first enumeration of the box-by-box growth chains from
    inner to outer.  Deliberately brute force: this is the independent
    oracle the algebraic identities are checked against, so it stays dumb.
    """
    outer, inner = as_partition(outer), as_partition(inner)
    if not contains(inner, outer):
        raise ValueError(f"{inner} is not contained in {outer}")

    target = list(outer)

    def grow(shape: list[int]) -> int:
        if shape == target:
            return 1
        total = 0
        for i in range(len(target)):
            cur = shape[i] if i < len(shape) else 0
            if cur >= target[i]:
                continue
            above = shape[i - 1] if i > 0 else None
            if i > 0 and above is not None and cur + 1 > above:
                continue  # adding here would break weak decrease
            grown = list(shape)
            while len(grown) <= i:
                grown.append(0)
            grown[i] = cur + 1
            total += grow(grown)
        return total

    start = list(inner) + [0] * (len(outer) - len(inner))
    return grow(start)


def hooks(lam: Partition) -> list[list[int]]:
    """Hook lengths per box: arm + leg + 1."""
    conj = conjugate(lam)
    return [
        [lam[i] - (j + 1) + conj[j] - i for j in range(lam[i])]
        for i in range(len(lam))
    ]


def normalized(lam: Partition) -> tuple[Fraction, ...]:
    """The spectrum lambda_i / |lambda| as exact fractions."""
    n = sum(lam)
    if n == 0:
        raise ValueError("cannot normalize the empty partition")
    return tuple(Fraction(p, n) for p in lam)


def parse_partition(text: str) -> Partition:
    """Parse the JSON-array syntax used on the command line, e.g. "[3,2,1]"."""
    import json

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not a partition: {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ValueError(f"not a partition: {text!r}")
    return as_partition(data)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition: "[3,2,1]"."""
    return "[" + ",".join(str(p) for p in lam) + "]"
