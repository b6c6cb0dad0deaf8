"""Sublocales of a finite frame and the coframe operations on them.

A sublocale is a subset of frame elements containing the top, closed under
binary meets, and closed under ``x -> s`` for every frame element ``x`` and
member ``s``.  Sublocales are stored as bitmasks over the owning frame.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import MixedFrames, InvalidSublocale
from .frame import FiniteFrame, frame_from_leq, bits, popcount


class Sublocale:
    """An immutable member of the coframe S(L)."""

    __slots__ = ("frame", "mask", "_frame_view")

    def __init__(self, frame: FiniteFrame, mask: int):
        self.frame = frame
        self.mask = mask
        self._frame_view = None

    @classmethod
    def of(cls, frame: FiniteFrame, members: Iterable[int]) -> "Sublocale":
        mask = 0
        for m in members:
            mask |= 1 << m
        if not is_sublocale(frame, mask):
            raise InvalidSublocale(
                f"{sorted(bits(mask))} is not a sublocale of {frame!r}")
        return cls(frame, mask)

    def members(self) -> Iterator[int]:
        return bits(self.mask)

    def labels(self) -> list[str]:
        return [self.frame.labels[i] for i in self.members()]

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __le__(self, other: "Sublocale") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, Sublocale) and other.frame is self.frame
                and other.mask == self.mask)

    def __hash__(self) -> int:
        return hash((id(self.frame), self.mask))

    def _check(self, other: "Sublocale") -> None:
        if other.frame is not self.frame:
            raise MixedFrames("sublocales belong to different frames")

    def is_void(self) -> bool:
        return self.mask == 1 << self.frame.top

    def is_whole(self) -> bool:
        return popcount(self.mask) == self.frame.n

    def min_element(self) -> int:
        """The meet of all members (the bottom of the induced frame)."""
        return self.frame.meet_of(self.members())

    def closure(self) -> "Sublocale":
        return closed_subl(self.frame, self.min_element())

    def is_dense(self) -> bool:
        return bool(self.mask >> self.frame.bottom & 1)

    def as_frame(self):
        """View this sublocale as a frame in its own right.

        Returns ``(frame, elems)`` where ``elems[i]`` is the ambient element
        index of subframe element ``i``.  Order is inherited; meets coincide
        with the ambient meets, joins and implication are recomputed inside.
        """
        if self._frame_view is None:
            f = self.frame
            elems = list(self.members())
            pos = {e: i for i, e in enumerate(elems)}
            up = [0] * len(elems)
            for i, e in enumerate(elems):
                m = f.up[e] & self.mask
                acc = 0
                for x in bits(m):
                    acc |= 1 << pos[x]
                up[i] = acc
            sub = frame_from_leq(
                up, labels=[f.labels[e] for e in elems],
                name=f"{f.name or 'frame'}|{''.join(sorted(self.labels()))}")
            self._frame_view = (sub, elems)
        return self._frame_view

    def __repr__(self) -> str:
        return f"Sublocale({self.frame.name or '?'}:{{{','.join(self.labels())}}})"


def is_sublocale(frame: FiniteFrame, subset: int | Iterable[int]) -> bool:
    """Check the three closure conditions on a candidate member set."""
    mask = subset if isinstance(subset, int) else _to_mask(subset)
    if not mask >> frame.top & 1:
        return False
    req = frame._impl_req
    meet = frame.meet_table
    elems = list(bits(mask))
    for s in elems:
        if req[s] & ~mask:
            return False
    for i, s in enumerate(elems):
        row = meet[s]
        for t in elems[i + 1:]:
            if not mask >> row[t] & 1:
                return False
    return True


def _to_mask(members: Iterable[int]) -> int:
    mask = 0
    for m in members:
        mask |= 1 << m
    return mask


def void_subl(frame: FiniteFrame) -> Sublocale:
    return Sublocale(frame, 1 << frame.top)


def whole_subl(frame: FiniteFrame) -> Sublocale:
    return Sublocale(frame, (1 << frame.n) - 1)


def closed_subl(frame: FiniteFrame, a: int) -> Sublocale:
    """c(a): the up-set of a."""
    return Sublocale(frame, frame.up[a])

def open_subl(frame: FiniteFrame, a: int) -> Sublocale:
    """o(a): the image of a -> (-); the complement of c(a) in S(L)."""
    mask = 0
    row = frame.impl_table[a]
    for x in range(frame.n):
        mask |= 1 << row[x]
    return Sublocale(frame, mask)


def closure(s: Sublocale) -> Sublocale:
    return s.closure()


def is_dense(s: Sublocale) -> bool:
    return s.is_dense()


def booleanization(frame: FiniteFrame) -> Sublocale:
    """{x -> 0 : x in L}, the smallest dense sublocale."""
    return Sublocale(frame, frame._bool_mask)


def subl_meet(ss: list[Sublocale]) -> Sublocale:
    if not ss:
        raise ValueError("need at least one sublocale")
    frame = ss[0].frame
    mask = (1 << frame.n) - 1
    for s in ss:
        ss[0]._check(s)
        mask &= s.mask
    return Sublocale(frame, mask)


def meet_close(frame: FiniteFrame, mask: int) -> int:
    """Close an element mask under binary meets and add the top."""
    mask |= 1 << frame.top
    meet = frame.meet_table
    changed = True
    while changed:
        changed = False
        elems = list(bits(mask))
        for i, a in enumerate(elems):
            row = meet[a]
            for b in elems[i:]:
                m = row[b]
                if not mask >> m & 1:
                    mask |= 1 << m
                    changed = True
    return mask


def subl_join(ss: list[Sublocale]) -> Sublocale:
    """Coframe join: all meets of subsets of the union of member sets."""
    if not ss:
        raise ValueError("need at least one sublocale")
    frame = ss[0].frame
    mask = 0
    for s in ss:
        ss[0]._check(s)
        mask |= s.mask
    return Sublocale(frame, meet_close(frame, mask))


def join_is_whole(frame: FiniteFrame, mask_a: int, mask_b: int) -> bool:
    """Whether the coframe join of two member masks is all of L.

    Avoids materializing the meet closure: the join is L iff every element
    is the meet of the union's members above it.
    """
    union = mask_a | mask_b
    for a in range(frame.n):
        if frame.meet_of(bits(union & frame.up[a])) != a:
            return False
    return True


def enumerate_sublocales(frame: FiniteFrame) -> list[Sublocale]:
    """All sublocales of the frame, ordered by mask (deterministic).

    Brute-force oracle: filters every subset containing the top.  Requires
    the enumeration cap; results are cached on the frame.
    """
    if frame._sublocales is None:
        frame.require_enumerable()
        top_bit = 1 << frame.top
        rest = [i for i in range(frame.n) if i != frame.top]
        out = []
        for sub in range(1 << len(rest)):
            mask = top_bit
            for j, e in enumerate(rest):
                if sub >> j & 1:
                    mask |= 1 << e
            if is_sublocale(frame, mask):
                out.append(mask)
        out.sort()
        frame._sublocales = [Sublocale(frame, m) for m in out]
    return list(frame._sublocales)


def supplement(frame: FiniteFrame, s: Sublocale) -> Sublocale:
    """L \\ S: the least sublocale whose join with S is the whole frame.

    This is the co-Heyting difference in S(L) (not the join of sublocales
    disjoint from S).  Closed and open sublocales are each other's
    complements, so those cases short-circuit; otherwise the candidates
    from the full enumeration are intersected, which by the coframe law
    yields the least one.
    """
    cached = frame._supplements.get(s.mask)
    if cached is not None:
        return Sublocale(frame, cached)
    bot = s.min_element()
    if s.mask == frame.up[bot]:                  # s is closed: c(bot)
        result = open_subl(frame, bot)
    else:
        mask = (1 << frame.n) - 1
        for t in enumerate_sublocales(frame):
            if join_is_whole(frame, s.mask, t.mask):
                mask &= t.mask
        result = Sublocale(frame, mask)
    frame._supplements[s.mask] = result.mask
    return result


def nucleus_map(s: Sublocale, a: int) -> int:
    """nu_S(a): the least member of S above a."""
    return s.frame.meet_of(bits(s.mask & s.frame.up[a]))


def is_nowhere_dense(frame: FiniteFrame, s: Sublocale) -> bool:
    """S /\\ BL = O; equivalently the meet of S is a dense element."""
    return s.mask & frame._bool_mask == 1 << frame.top


def s_nowhere_dense_sublocales(s: Sublocale) -> list[Sublocale]:
    """All S-nowhere dense members of S(S), as ambient sublocales.

    Enumerated inside the induced frame of S (the independent oracle path):
    subsets of S are filtered through the subframe's own closure conditions
    and nowhere density is decided against the subframe's Booleanization.
    """
    sub, elems = s.as_frame()
    out = []
    for n_sub in enumerate_sublocales(sub):
        if is_nowhere_dense(sub, n_sub):
            mask = 0
            for i in n_sub.members():
                mask |= 1 << elems[i]
            out.append(Sublocale(s.frame, mask))
    return out


def s_dense_elements(s: Sublocale) -> list[int]:
    """Ambient indices of the S-dense elements of S (pseudocomplement 0_S)."""
    sub, elems = s.as_frame()
    return [elems[i] for i in range(sub.n)
            if sub.pseudocomplement(i) == sub.bottom]


def nd_join(frame: FiniteFrame, s: Sublocale) -> Sublocale:
    """Nd(S): the join in S(L) of all S-nowhere dense sublocales of S.

    Requires S dense.  Uses the fact that a sublocale of S is S-nowhere
    dense exactly when its meet is S-dense, and that for dense S the
    S-pseudocomplement agrees with the ambient one; cross-checked against
    the induced-frame oracle in the test suite.
    """
    if not s.is_dense():
        raise InvalidSublocale("Nd(S) is defined for dense S")
    union = 0
    dense = frame._dense_mask
    for t in enumerate_sublocales(frame):
        if t.mask & ~s.mask == 0 and dense >> t.min_element() & 1:
            union |= t.mask
    return Sublocale(frame, meet_close(frame, union))


def nd_join_oracle(frame: FiniteFrame, s: Sublocale) -> Sublocale:
    """Nd(S) via the induced-frame enumeration of S(S)."""
    if not s.is_dense():
        raise InvalidSublocale("Nd(S) is defined for dense S")
    return subl_join([void_subl(frame)] + s_nowhere_dense_sublocales(s))


def is_rare(frame: FiniteFrame, s: Sublocale) -> bool:
    """Rare: the supplement is the whole locale."""
    return supplement(frame, s).is_whole()


def is_dense_in_itself(frame: FiniteFrame) -> bool:
    """Dense in itself: the Booleanization is rare."""
    return is_rare(frame, booleanization(frame))


def serialize_sublocale(s: Sublocale) -> list[str]:
    return sorted(s.labels())
