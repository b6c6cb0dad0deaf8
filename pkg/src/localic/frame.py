"""Finite frames (complete distributive lattices) with precomputed tables.

Elements are integers ``0..n-1``.  Sets of elements are carried around as
int bitmasks throughout the package; ``bits(mask)`` iterates the indices.
A frame is immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotAPartialOrder, NotALattice, NotDistributive, FrameTooLarge

# Frames larger than this are rejected outright.
MAX_ELEMENTS = 64
# Operations that enumerate all 2^n candidate subsets refuse frames above this.
ENUMERATION_CAP = 16


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class FiniteFrame:
    """A finite bounded distributive lattice with Heyting implication.

    Do not call directly: use :func:`build_frame` or :func:`frame_from_leq`,
    which validate the order and precompute all tables.
    """

    __slots__ = (
        "n", "up", "down", "meet_table", "join_table", "impl_table",
        "bottom", "top", "labels", "name",
        "_label_index", "_impl_req", "_dense_mask", "_bool_mask",
        "_sublocales", "_supplements",
    )

    def __init__(self, n, up, down, meet_table, join_table, impl_table,
                 bottom, top, labels, name):
        self.n = n
        self.up = up            # up[a] = bitmask of {x : a <= x}
        self.down = down        # down[a] = bitmask of {x : x <= a}
        self.meet_table = meet_table
        self.join_table = join_table
        self.impl_table = impl_table
        self.bottom = bottom
        self.top = top
        self.labels = labels
        self.name = name
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        # For element s: the mask of elements {x -> s : x in L} that any
        # sublocale containing s must also contain.
        self._impl_req = tuple(
            _mask_of(impl_table[x][s] for x in range(n)) for s in range(n)
        )
        self._dense_mask = _mask_of(
            a for a in range(n) if impl_table[a][bottom] == bottom
        )
        self._bool_mask = _mask_of(impl_table[x][bottom] for x in range(n))
        self._sublocales = None     # lazy cache, see sublocale.py
        self._supplements = {}      # mask -> supplement mask cache

    # -- order and lattice operations ------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def heyting(self, a: int, b: int) -> int:
        """Largest x with x /\\ a <= b."""
        return self.impl_table[a][b]

    def pseudocomplement(self, a: int) -> int:
        return self.impl_table[a][self.bottom]

    def meet_of(self, xs: Iterable[int]) -> int:
        """Meet of a finite element set; the empty meet is top."""
        out = self.top
        row = self.meet_table
        for x in xs:
            out = row[out][x]
        return out

    def join_of(self, xs: Iterable[int]) -> int:
        """Join of a finite element set; the empty join is bottom."""
        out = self.bottom
        row = self.join_table
        for x in xs:
            out = row[out][x]
        return out

    def meet_of_mask(self, mask: int) -> int:
        return self.meet_of(bits(mask))

    def join_of_mask(self, mask: int) -> int:
        return self.join_of(bits(mask))

    # -- element predicates -----------------------------------------------

    def is_dense_element(self, a: int) -> bool:
        return bool(self._dense_mask >> a & 1)

    def is_complemented_element(self, a: int) -> bool:
        return self.join_table[a][self.pseudocomplement(a)] == self.top

    def is_point(self, p: int) -> bool:
        """p < 1 and a /\\ b <= p forces a <= p or b <= p."""
        if p == self.top:
            return False
        below_p = self.down[p]
        for a in range(self.n):
            if below_p >> a & 1:
                continue
            for b in range(a, self.n):
                if below_p >> b & 1:
                    continue
                if below_p >> self.meet_table[a][b] & 1:
                    return False
        return True

    def is_boolean(self) -> bool:
        return all(self.is_complemented_element(a) for a in range(self.n))

    def dense_elements_mask(self) -> int:
        return self._dense_mask

    # -- misc ---------------------------------------------------------------

    def require_enumerable(self) -> None:
        if self.n > ENUMERATION_CAP:
            raise FrameTooLarge(
                f"frame {self.name or ''} has {self.n} elements; full subset "
                f"enumeration is capped at {ENUMERATION_CAP}"
            )

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        return self._label_index[label]

    def elements(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        return f"FiniteFrame({self.name or 'unnamed'}, n={self.n})"


def _mask_of(xs: Iterable[int]) -> int:
    out = 0
    for x in xs:
        out |= 1 << x
    return out


def _close_order(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Reflexive-transitive closure of a generating relation, as up-masks."""
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPartialOrder(f"pair ({a},{b}) out of range for n={n}")
        up[a] |= 1 << b
    for k in range(n):
        upk = up[k]
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= upk
    return up


def frame_from_leq(up: Sequence[int],
                   labels: Optional[Sequence[str]] = None,
                   name: Optional[str] = None) -> FiniteFrame:
    """Build a frame from a full partial order given as up-set bitmasks.

    Validates antisymmetry, lattice structure and distributivity, then
    precomputes the meet/join/implication tables.
    """
    n = len(up)
    if n == 0:
        raise NotALattice("a frame needs at least one element")
    if n > MAX_ELEMENTS:
        raise FrameTooLarge(f"{n} elements exceeds the cap of {MAX_ELEMENTS}")
    for a in range(n):
        for b in range(a + 1, n):
            if up[a] >> b & 1 and up[b] >> a & 1:
                raise NotAPartialOrder(
                    f"elements {a} and {b} are in a cycle")
    down = [_mask_of(x for x in range(n) if up[x] >> a & 1) for a in range(n)]

    def glb(a: int, b: int) -> int:
        lower = down[a] & down[b]
        for m in bits(lower):
            if lower & ~down[m] == 0:
                return m
        raise NotALattice(f"elements {a} and {b} have no meet")

    def lub(a: int, b: int) -> int:
        upper = up[a] & up[b]
        for m in bits(upper):
            if upper & ~up[m] == 0:
                return m
        raise NotALattice(f"elements {a} and {b} have no join")

    meet_table = [[0] * n for _ in range(n)]
    join_table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            meet_table[a][b] = meet_table[b][a] = glb(a, b)
            join_table[a][b] = join_table[b][a] = lub(a, b)

    bottom = next(a for a in range(n) if popcount(up[a]) == n)
    top = next(a for a in range(n) if popcount(down[a]) == n)

    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = meet_table[a][join_table[b][c]]
                rhs = join_table[meet_table[a][b]][meet_table[a][c]]
                if lhs != rhs:
                    raise NotDistributive(
                        f"witness triple ({a},{b},{c}): "
                        f"{a}/\\({b}\\/{c})={lhs} but ({a}/\\{b})\\/({a}/\\{c})={rhs}")

    # a -> b is the join of {x : x /\ a <= b}; in a distributive finite
    # lattice that set is join-closed, so the fold lands on its maximum.
    impl_table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            r = bottom
            for x in range(n):
                if down[b] >> meet_table[x][a] & 1:
                    r = join_table[r][x]
            impl_table[a][b] = r

    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise NotALattice("labels must be distinct and one per element")
    return FiniteFrame(n, tuple(up), tuple(down),
                       tuple(tuple(r) for r in meet_table),
                       tuple(tuple(r) for r in join_table),
                       tuple(tuple(r) for r in impl_table),
                       bottom, top, labels, name)


def build_frame(order: Iterable[tuple[int, int]], n: int,
                labels: Optional[Sequence[str]] = None,
                name: Optional[str] = None) -> FiniteFrame:
    """Construct a validated frame from a generating relation.

    ``order`` may be a cover relation or any generating set of pairs
    ``(a, b)`` meaning ``a <= b``; its reflexive-transitive closure is taken
    first.  Raises NotAPartialOrder / NotALattice / NotDistributive.
    """
    if n <= 0:
        raise NotALattice("element count must be positive")
    up = _close_order(n, order)
    return frame_from_leq(up, labels=labels, name=name)


# -- stock frames used all over the tests and docs ---------------------------

def chain_frame(n: int, name: Optional[str] = None) -> FiniteFrame:
    """The n-element chain 0 < 1 < ... < n-1."""
    return build_frame([(i, i + 1) for i in range(n - 1)], n,
                       name=name or f"C{n}")


def boolean_frame(k: int, name: Optional[str] = None) -> FiniteFrame:
    """The powerset lattice 2^k, elements ordered by bitmask inclusion."""
    n = 1 << k
    pairs = [(a, a | (1 << i)) for a in range(n) for i in range(k)
             if not a >> i & 1]
    return build_frame(pairs, n, name=name or f"B{k}")
