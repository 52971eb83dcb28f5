"""
Permutation helpers.

Permutations are tuples ``p`` of length n with ``p[i]`` the image of ``i``.
``compose(p, q)`` applies ``q`` first.
"""

from collections import defaultdict
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple

Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(seq: Sequence[int], n: int) -> bool:
    return len(seq) == n and sorted(seq) == list(range(n))


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Return p∘q (apply q, then p)."""
    return tuple(p[v] for v in q)


def conjugate(pi: Sequence[int], f: Sequence[int]) -> Perm:
    """Return pi∘f∘pi⁻¹, i.e. f with its points renamed by pi."""
    out = [0] * len(f)
    for j, v in enumerate(f):
        out[pi[j]] = pi[v]
    return tuple(out)


def cycles(p: Sequence[int]) -> List[List[int]]:
    """Cycles of p, each starting at its smallest point, ordered by that point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        out.append(cycle)
    return out


def cycle_type(p: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(p)))


def cycle_form(p: Sequence[int]) -> Perm:
    """
    The lexicographically least permutation conjugate to p.

    Cycles are laid out by ascending length on consecutive points, each one
    mapping c -> c+1 and its last point back to its first.
    """
    out = []
    base = 0
    for length in cycle_type(p):
        for i in range(length):
            out.append(base + (i + 1) % length)
        base += length
    return tuple(out)


def conjugators(f: Sequence[int], target: Sequence[int]) -> Iterator[Perm]:
    """
    Yield every pi with pi∘f∘pi⁻¹ == target.

    Cycles of equal length are matched in every order and with every
    rotation, so the count is the product of m_L!·L^m_L over cycle lengths L
    occurring m_L times. Nothing is yielded when the cycle types differ.
    """
    by_len_f: Dict[int, List[List[int]]] = defaultdict(list)
    by_len_t: Dict[int, List[List[int]]] = defaultdict(list)
    for c in cycles(f):
        by_len_f[len(c)].append(c)
    for c in cycles(target):
        by_len_t[len(c)].append(c)
    if {L: len(cs) for L, cs in by_len_f.items()} != {L: len(cs) for L, cs in by_len_t.items()}:
        return

    lengths = sorted(by_len_f)
    choices = []
    for L in lengths:
        count = len(by_len_f[L])
        choices.append([
            (order, shifts)
            for order in permutations(range(count))
            for shifts in product(range(L), repeat=count)
        ])

    n = len(f)
    for combo in product(*choices):
        pi = [0] * n
        for L, (order, shifts) in zip(lengths, combo):
            src = by_len_f[L]
            dst = by_len_t[L]
            for a, b in enumerate(order):
                cyc = src[b]
                for i in range(L):
                    pi[cyc[(shifts[a] + i) % L]] = dst[a][i]
        yield tuple(pi)


def derangements(n: int) -> List[Perm]:
    """All fixed-point-free permutations of range(n), in lexicographic order."""
    out: List[Perm] = []
    row = [0] * n

    def place(j: int, used: int) -> None:
        if j == n:
            out.append(tuple(row))
            return
        for v in range(n):
            if v != j and not used >> v & 1:
                row[j] = v
                place(j + 1, used | 1 << v)

    place(0, 0)
    return out
