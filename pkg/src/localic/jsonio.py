"""JSON document formats for frames, maps, squares and chains.

A document is a single JSON object with a "type" key.  Frames list their
elements and a generating relation; maps and diagrams embed the frames
they mention and reference them by name.

  frame:  {"type": "frame", "name": n, "elements": [...],
           "order": [[a, b], ...]}                        (a <= b pairs)
  map:    {"type": "map", "frames": [...], "source": n, "target": n,
           "table": {label: label}}
  square: {"type": "square", "frames": [...], "maps": {name: mapbody},
           "square": {"g": name, "f": name, "alpha": name, "omega": name}}
  chain:  square fields plus {"chain": {"i","k","phi","theta","sigma"}}
"""

from __future__ import annotations

import json
from typing import Union

from .errors import InvalidDocument, LocalicError
from .frame import FiniteFrame, build_frame
from .locmap import LocalicMap, build_map
from .diagrams import DenseSquare, SquareChain

Document = Union[FiniteFrame, LocalicMap, DenseSquare, SquareChain]


def frame_from_json(doc: dict) -> FiniteFrame:
    try:
        labels = list(doc["elements"])
        pairs = [(labels.index(a), labels.index(b)) for a, b in doc["order"]]
    except (KeyError, TypeError) as e:
        raise InvalidDocument(f"malformed frame document: {e}")
    except ValueError as e:
        raise InvalidDocument(f"order references unknown element: {e}")
    return build_frame(pairs, len(labels), labels=labels,
                       name=doc.get("name"))


def _map_from_body(body: dict, frames: dict[str, FiniteFrame],
                   name: str = "") -> LocalicMap:
    try:
        src = frames[body["source"]]
        tgt = frames[body["target"]]
        tab = body["table"]
    except KeyError as e:
        raise InvalidDocument(f"map references unknown frame or field: {e}")
    table = [0] * src.n
    if set(tab) != set(src.labels):
        raise InvalidDocument("map table keys must cover the source exactly")
    for a, b in tab.items():
        try:
            table[src.index_of(a)] = tgt.index_of(b)
        except KeyError as e:
            raise InvalidDocument(f"unknown element label: {e}")
    return build_map(src, tgt, table, name=name or None)


def _frames_of(doc: dict) -> dict[str, FiniteFrame]:
    frames = {}
    for fdoc in doc.get("frames", []):
        f = frame_from_json(fdoc)
        if f.name in frames:
            raise InvalidDocument(f"duplicate frame name {f.name!r}")
        frames[f.name] = f
    return frames


def _square_from_json(doc: dict) -> tuple[DenseSquare, dict[str, LocalicMap]]:
    frames = _frames_of(doc)
    maps = {name: _map_from_body(body, frames, name)
            for name, body in doc.get("maps", {}).items()}
    try:
        sq = doc["square"]
        parts = [maps[sq[k]] for k in ("g", "f", "alpha", "omega")]
    except KeyError as e:
        raise InvalidDocument(f"square references unknown map or field: {e}")
    return DenseSquare(*parts), maps


def document_from_json(doc: dict) -> Document:
    if not isinstance(doc, dict) or "type" not in doc:
        raise InvalidDocument("document must be an object with a 'type' key")
    kind = doc["type"]
    if kind == "frame":
        return frame_from_json(doc)
    if kind == "map":
        return _map_from_body(doc, _frames_of(doc))
    if kind == "square":
        return _square_from_json(doc)[0]
    if kind == "chain":
        outer, maps = _square_from_json(doc)
        try:
            ch = doc["chain"]
            parts = [maps[ch[k]] for k in ("i", "k", "phi", "theta", "sigma")]
        except KeyError as e:
            raise InvalidDocument(f"chain references unknown map or field: {e}")
        return SquareChain(outer, *parts)
    raise InvalidDocument(f"unknown document type {kind!r}")


def load_document(path: str) -> Document:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InvalidDocument(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise InvalidDocument(f"not valid JSON: {e}")
    return document_from_json(doc)
