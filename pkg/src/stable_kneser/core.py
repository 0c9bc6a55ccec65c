"""Vertices of the s-stable Kneser graph, their gap words and rotation classes.

A vertex is a sorted tuple of ``k`` elements of ``{1..n}``.  Internally the hot
paths use an ``n``-bit integer mask (bit ``e - 1`` set for element ``e``);
Python ints are arbitrary precision so there is no limit on ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import InvalidParams, MalformedSet

Vertex = Tuple[int, ...]
GapSequence = Tuple[int, ...]


@dataclass(frozen=True)
class Params:
    n: int
    k: int
    s: int

    @property
    def r(self) -> int:
        return self.n - self.s * self.k

    @property
    def blanks(self) -> int:
        return self.n - self.k

    def __str__(self) -> str:
        return f"K_{self.s}-stab({self.n},{self.k})"


def make_params(n: int, k: int, s: int) -> Params:
    for name, value in (("n", n), ("k", k), ("s", s)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidParams(f"{name} must be an integer, got {value!r}")
    if s < 2:
        raise InvalidParams(f"s={s}: stability below 2 is not supported")
    if k < 1:
        raise InvalidParams(f"k={k}: subset size must be at least 1")
    if n < s * k:
        raise InvalidParams(f"n={n} < s*k={s * k}: the vertex set is empty")
    return Params(n, k, s)


# -- vertices -----------------------------------------------------------------

def check_elements(elements: Sequence[int], p: Params) -> Vertex:
    """Return ``elements`` as a Vertex tuple or raise MalformedSet."""
    v = tuple(elements)
    if len(v) != p.k:
        raise MalformedSet(f"expected {p.k} elements, got {len(v)}")
    for e in v:
        if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= p.n:
            raise MalformedSet(f"element {e!r} outside [1, {p.n}]")
    if any(a >= b for a, b in zip(v, v[1:])):
        raise MalformedSet(f"elements {list(v)} not strictly increasing")
    return v


def is_stable(elements: Sequence[int], p: Params) -> bool:
    v = check_elements(elements, p)
    if p.k == 1:
        return p.n >= p.s
    for a, b in zip(v, v[1:]):
        if b - a < p.s:
            return False
    return v[0] + p.n - v[-1] >= p.s


def adjacent(u: Sequence[int], v: Sequence[int]) -> bool:
    return set(u).isdisjoint(v)


def rotate(v: Sequence[int], t: int, n: int) -> Vertex:
    return tuple(sorted((e - 1 + t) % n + 1 for e in v))


def to_mask(v: Sequence[int]) -> int:
    m = 0
    for e in v:
        m |= 1 << (e - 1)
    return m


def from_mask(m: int) -> Vertex:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length())
        m ^= low
    return tuple(out)


def rotate_mask(m: int, t: int, n: int) -> int:
    t %= n
    if t == 0:
        return m
    full = (1 << n) - 1
    return ((m << t) | (m >> (n - t))) & full


def mask_is_stable(m: int, p: Params) -> bool:
    """Stability test on a mask with exactly ``k`` bits set."""
    if bin(m).count("1") != p.k or m >> p.n:
        return False
    # no two marked cells at cyclic distance 1..s-1
    for t in range(1, p.s):
        if m & rotate_mask(m, t, p.n):
            return False
    return True


# -- gap words ----------------------------------------------------------------

def gap_sequence(v: Sequence[int], p: Params) -> GapSequence:
    """Blank counts between cyclically consecutive elements, from the smallest."""
    v = sorted(v)
    gaps = [b - a - 1 for a, b in zip(v, v[1:])]
    gaps.append(v[0] + p.n - v[-1] - 1)
    return tuple(gaps)


def vertex_from_gaps(gaps: Sequence[int], p: Params, start: int = 1) -> Vertex:
    """Place the first marked cell at ``start`` and walk the gap word."""
    if len(gaps) != p.k or sum(gaps) != p.blanks:
        raise MalformedSet(f"gap word {tuple(gaps)} does not fit {p}")
    out = []
    pos = start - 1
    for g in gaps:
        out.append(pos % p.n + 1)
        pos += g + 1
    return tuple(sorted(out))


def least_rotation(word: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth, O(len))."""
    s = list(word) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def minimal_period(word: Sequence[int]) -> int:
    """Length of the shortest block whose repetition gives the cyclic word."""
    m = len(word)
    fail = [0] * (m + 1)
    fail[0] = -1
    j = -1
    for i in range(m):
        while j >= 0 and word[j] != word[i]:
            j = fail[j]
        j += 1
        fail[i + 1] = j
    p = m - fail[m]
    return p if m % p == 0 else m


def canonical_necklace(gaps: Sequence[int]) -> GapSequence:
    i = least_rotation(gaps)
    return tuple(gaps[i:]) + tuple(gaps[:i])


# -- classes ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ClassInfo:
    """A rotation orbit, keyed by its canonical gap necklace.

    ``period_d`` is the number of repeated blocks in the necklace, so the orbit
    has ``order = n / period_d`` vertices.
    """

    necklace: GapSequence
    period_d: int
    order: int
    base_vertex: Vertex

    @property
    def block(self) -> GapSequence:
        return self.necklace[: len(self.necklace) // self.period_d]


def class_from_necklace(necklace: Sequence[int], p: Params) -> ClassInfo:
    """ClassInfo for a gap word that is already in canonical rotation."""
    necklace = tuple(necklace)
    d = len(necklace) // minimal_period(necklace)
    return ClassInfo(necklace, d, p.n // d, vertex_from_gaps(necklace, p))


def canonical_class(v: Sequence[int], p: Params) -> ClassInfo:
    return class_from_necklace(canonical_necklace(gap_sequence(v, p)), p)


def class_order(g: Sequence[int], p: Params) -> int:
    d = len(g) // minimal_period(tuple(g))
    return p.n // d


# -- text forms ---------------------------------------------------------------

def format_vertex(v: Sequence[int]) -> str:
    return "{" + ",".join(map(str, v)) + "}"


def format_gaps(g: Sequence[int]) -> str:
    return "(" + ",".join(map(str, g)) + ")"


def parse_vertex(text: str) -> Vertex:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise MalformedSet(f"cannot parse vertex {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError:
        raise MalformedSet(f"cannot parse vertex {text!r}") from None
