"""Localic maps between finite frames.

A localic map preserves all meets; its derived left adjoint (the frame
homomorphism) must preserve finite meets.  The adjoint is computed, never
supplied.  Image and preimage functions act on sublocales and form a
Galois adjunction.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import AdjointNotFrameHom, MixedFrames, NotMeetPreserving
from .frame import FiniteFrame, bits
from .sublocale import Sublocale, enumerate_sublocales, is_sublocale, meet_close


class LocalicMap:
    """A validated meet-preserving map with its derived adjoint."""

    __slots__ = ("source", "target", "table", "adjoint_table", "name",
                 "_image_masks")

    def __init__(self, source, target, table, adjoint_table, name=None):
        self.source = source
        self.target = target
        self.table = table
        self.adjoint_table = adjoint_table
        self.name = name
        self._image_masks = None

    def _images(self) -> list[tuple[int, int]]:
        """(source sublocale mask, image mask) pairs, cached."""
        if self._image_masks is None:
            pairs = []
            for a in enumerate_sublocales(self.source):
                img = 0
                for x in a.members():
                    img |= 1 << self.table[x]
                pairs.append((a.mask, img))
            self._image_masks = pairs
        return self._image_masks

    def __call__(self, x: int) -> int:
        return self.table[x]

    def adjoint(self, y: int) -> int:
        return self.adjoint_table[y]

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source.n

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.n

    # -- map-level properties ---------------------------------------------

    def is_dense_map(self) -> bool:
        """The adjoint maps only the bottom element to the bottom element."""
        src, tgt = self.source, self.target
        return all(y == tgt.bottom
                   for y in range(tgt.n)
                   if self.adjoint_table[y] == src.bottom) \
            and self.adjoint_table[tgt.bottom] == src.bottom

    def is_skeletal(self) -> bool:
        """Forward table sends dense elements to dense elements."""
        return table_is_skeletal(self.source, self.target, self.table)

    def adjoint_is_skeletal(self) -> bool:
        return table_is_skeletal(self.target, self.source, self.adjoint_table)

    def is_weakly_closed_adjoint(self) -> bool:
        """a \\/ f*(b) = 1 implies f(a) \\/ b = 1."""
        src, tgt = self.source, self.target
        for a in range(src.n):
            fa = self.table[a]
            for b in range(tgt.n):
                if src.join_table[a][self.adjoint_table[b]] == src.top \
                        and tgt.join_table[fa][b] != tgt.top:
                    return False
        return True

    def is_closed_map(self) -> bool:
        """f(x \\/ f*(y)) = f(x) \\/ y for all x, y."""
        src, tgt = self.source, self.target
        for x in range(src.n):
            for y in range(tgt.n):
                lhs = self.table[src.join_table[x][self.adjoint_table[y]]]
                if lhs != tgt.join_table[self.table[x]][y]:
                    return False
        return True

    def is_nowhere_dense_adjoint(self) -> bool:
        """Every nonzero x in the target dominates a nonzero y with f*(y) = 0."""
        src, tgt = self.source, self.target
        for x in range(tgt.n):
            if x == tgt.bottom:
                continue
            if not any(self.adjoint_table[y] == src.bottom
                       for y in bits(tgt.down[x]) if y != tgt.bottom):
                return False
        return True

    # -- sublocale image / preimage -----------------------------------------

    def image_subl(self, a: Sublocale) -> Sublocale:
        """Elementwise image; always a sublocale for a localic map."""
        if a.frame is not self.source:
            raise MixedFrames("sublocale not in the map's source frame")
        mask = 0
        for x in a.members():
            mask |= 1 << self.table[x]
        if not is_sublocale(self.target, mask):
            raise AdjointNotFrameHom(
                "image of a sublocale failed the sublocale conditions")
        return Sublocale(self.target, mask)

    def preimage_subl(self, b: Sublocale) -> Sublocale:
        """Largest sublocale whose image lands inside b.

        Computed as the coframe join of every enumerated sublocale with
        image inside b; the image function preserves joins, so the join
        still maps into b.
        """
        if b.frame is not self.target:
            raise MixedFrames("sublocale not in the map's target frame")
        union = 0
        for a_mask, img in self._images():
            if img & ~b.mask == 0:
                union |= a_mask
        return Sublocale(self.source, meet_close(self.source, union))

    def preimage_open(self, a: int) -> Sublocale:
        """f_{-1}[o(a)] = o(f*(a)) without enumerating."""
        from .sublocale import open_subl
        return open_subl(self.source, self.adjoint_table[a])

    def preimage_closed(self, a: int) -> Sublocale:
        """f_{-1}[c(a)] = c(f*(a)) without enumerating."""
        from .sublocale import closed_subl
        return closed_subl(self.source, self.adjoint_table[a])

    def image_is_surjective(self) -> bool:
        """Whether f[-] : S(L) -> S(M) is onto."""
        images = {img for _, img in self._images()}
        return images == {t.mask for t in enumerate_sublocales(self.target)}

    def __repr__(self) -> str:
        return (f"LocalicMap({self.name or '?'}: "
                f"{self.source.name}->{self.target.name})")


def table_is_skeletal(src: FiniteFrame, tgt: FiniteFrame,
                      table: Sequence[int]) -> bool:
    """Dense elements of the source land on dense elements of the target."""
    return all(tgt.is_dense_element(table[a])
               for a in range(src.n) if src.is_dense_element(a))


def check_table(src: FiniteFrame, tgt: FiniteFrame,
                table: Sequence[int]) -> Optional[tuple]:
    """Fast validity test for a candidate table; returns a witness or None."""
    if table[src.top] != tgt.top:
        return ("top", src.top)
    for a in range(src.n):
        for b in range(a + 1, src.n):
            if tgt.meet_table[table[a]][table[b]] != table[src.meet_table[a][b]]:
                return ("meet", a, b)
    return None


def derive_adjoint(src: FiniteFrame, tgt: FiniteFrame,
                   table: Sequence[int]) -> list[int]:
    adj = []
    for y in range(tgt.n):
        adj.append(src.meet_of(
            x for x in range(src.n) if tgt.up[y] >> table[x] & 1))
    return adj


def adjoint_defect(src: FiniteFrame, tgt: FiniteFrame,
                   adj: Sequence[int]) -> Optional[tuple]:
    """Check the adjoint preserves top and binary meets; witness or None."""
    if adj[tgt.top] != src.top:
        return ("top",)
    for a in range(tgt.n):
        for b in range(a + 1, tgt.n):
            if src.meet_table[adj[a]][adj[b]] != adj[tgt.meet_table[a][b]]:
                return ("meet", a, b)
    return None


def build_map(src: FiniteFrame, tgt: FiniteFrame,
              table: Iterable[int], name: Optional[str] = None) -> LocalicMap:
    """Validate a table as a localic map and derive its adjoint."""
    table = tuple(table)
    if len(table) != src.n or any(not 0 <= v < tgt.n for v in table):
        raise NotMeetPreserving("table has wrong length or out-of-range values")
    defect = check_table(src, tgt, table)
    if defect is not None:
        raise NotMeetPreserving(f"witness {defect}")
    adj = derive_adjoint(src, tgt, table)
    defect = adjoint_defect(src, tgt, adj)
    if defect is not None:
        raise AdjointNotFrameHom(f"witness {defect}")
    return LocalicMap(src, tgt, table, tuple(adj), name=name)


def identity_map(frame: FiniteFrame) -> LocalicMap:
    return LocalicMap(frame, frame, tuple(range(frame.n)),
                      tuple(range(frame.n)), name="id")


def compose(outer: LocalicMap, inner: LocalicMap,
            name: Optional[str] = None) -> LocalicMap:
    """outer after inner; composition of localic maps is localic."""
    if inner.target is not outer.source:
        raise MixedFrames("maps do not compose")
    table = tuple(outer.table[inner.table[x]] for x in range(inner.source.n))
    adj = tuple(inner.adjoint_table[outer.adjoint_table[y]]
                for y in range(outer.target.n))
    return LocalicMap(inner.source, outer.target, table, adj, name=name)
