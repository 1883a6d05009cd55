"""JSON documents describing d-frames, and the generator spec parser.

Document shape:

    {"name": str,
     "minus": {"elements": [ids], "covers": [[lo, hi], ...] | "leq": [[a, b], ...]},
     "plus":  {...},
     "con": [[plus_id, minus_id], ...],
     "tot": [[minus_id, plus_id], ...]}

Relation lists are generators by default: the loader closes them under the
nullary pairs, lower/upper sets and the binary combination laws before
validation.  Strict mode validates the literal sets instead.
"""

from __future__ import annotations

import json

import numpy as np

from .dframe import DFrame, close_con_generators, close_tot_generators
from .errors import ParseError, UnknownSpec
from .frames import Frame
from .order import Lattice


def frame_to_block(frame: Frame) -> dict:
    covers = [
        [frame.elements[i], frame.elements[j]]
        for i, j in zip(*np.where(frame.lattice.covers))
    ]
    return {"name": frame.name, "elements": list(frame.elements), "covers": covers}


def frame_from_block(block: dict, default_name: str) -> Frame:
    if not isinstance(block, dict) or "elements" not in block:
        raise ParseError(f"frame block {default_name!r} needs an 'elements' list")
    elements = [str(e) for e in block["elements"]]
    if "covers" in block:
        pairs = block["covers"]
    elif "leq" in block:
        pairs = block["leq"]
    else:
        raise ParseError(f"frame block {default_name!r} needs 'covers' or 'leq'")
    lattice = Lattice.from_covers(elements, [(str(a), str(b)) for a, b in pairs])
    return Frame(lattice, name=str(block.get("name", default_name)))


def to_document(df: DFrame) -> dict:
    return {
        "name": df.name,
        "minus": frame_to_block(df.minus),
        "plus": frame_to_block(df.plus),
        "con": [[p, m] for p, m in df.con_pairs()],
        "tot": [[m, p] for m, p in df.tot_pairs()],
    }


def from_document(doc: dict, strict: bool = False) -> DFrame:
    """Build the (unvalidated) d-frame a document describes.

    Run validate() on the result; the loader only guarantees well-formed
    carriers and resolvable relation pairs.
    """
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    for key in ("minus", "plus"):
        if key not in doc:
            raise ParseError(f"document is missing the {key!r} frame block")
    minus = frame_from_block(doc["minus"], "minus")
    plus = frame_from_block(doc["plus"], "plus")

    con = np.zeros((plus.n, minus.n), dtype=bool)
    for k, pair in enumerate(doc.get("con", [])):
        try:
            p, m = pair
        except (TypeError, ValueError):
            raise ParseError(f"con[{k}] is not a pair: {pair!r}") from None
        con[plus.idx(str(p)), minus.idx(str(m))] = True
    tot = np.zeros((minus.n, plus.n), dtype=bool)
    for k, pair in enumerate(doc.get("tot", [])):
        try:
            m, p = pair
        except (TypeError, ValueError):
            raise ParseError(f"tot[{k}] is not a pair: {pair!r}") from None
        tot[minus.idx(str(m)), plus.idx(str(p))] = True

    if not strict:
        con = close_con_generators(minus, plus, con)
        tot = close_tot_generators(minus, plus, tot)
    return DFrame(minus, plus, con, tot, name=str(doc.get("name", "dframe")))


def loads(text: str, strict: bool = False) -> DFrame:
    if not text.strip():
        raise ParseError("empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_document(doc, strict=strict)


def load_path(path, strict: bool = False) -> DFrame:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text, strict=strict)


def _fmt_pairs(pairs) -> str:
    inner = ", ".join("[" + ", ".join(json.dumps(x) for x in p) + "]" for p in pairs)
    return f"[{inner}]"


def dumps(df: DFrame) -> str:
    """Render a document with one block per line; pair lists stay inline so
    files remain diffable and hand-editable."""
    doc = to_document(df)

    def block(b):
        return ("{" + f'"name": {json.dumps(b["name"])}, '
                f'"elements": {json.dumps(b["elements"])}, '
                f'"covers": {_fmt_pairs(b["covers"])}' + "}")

    lines = [
        "{",
        f'  "name": {json.dumps(doc["name"])},',
        f'  "minus": {block(doc["minus"])},',
        f'  "plus": {block(doc["plus"])},',
        f'  "con": {_fmt_pairs(doc["con"])},',
        f'  "tot": {_fmt_pairs(doc["tot"])}',
        "}",
    ]
    return "\n".join(lines) + "\n"


# -- generator specs ------------------------------------------------------------


def _frame_from_spec(parts: list[str]) -> tuple[Frame, list[str]]:
    if not parts:
        raise UnknownSpec("spec ended where a frame was expected")
    kind = parts[0]
    if kind == "chain":
        if len(parts) < 2 or not parts[1].isdigit():
            raise UnknownSpec("chain needs a size, e.g. chain:3")
        return Frame.chain(int(parts[1])), parts[2:]
    if kind == "bool":
        if len(parts) < 2 or not parts[1].isdigit():
            raise UnknownSpec("bool needs an atom count, e.g. bool:2")
        return Frame.boolean(int(parts[1])), parts[2:]
    raise UnknownSpec(f"unknown frame kind {kind!r} (expected chain or bool)")


def dframe_from_spec(spec: str) -> DFrame:
    """Build a d-frame from a spec string.

    Supported: ``min:<frame>:<frame>`` and ``sym:<frame>`` where a frame is
    ``chain:N`` or ``bool:N`` (N atoms).  Examples: ``min:chain:3:chain:3``
    is the d-frame called 3.3; ``sym:chain:3`` is the symmetric d-frame on
    the 3-chain.
    """
    from .dframe import minimal_dframe, symmetric_dframe

    parts = spec.strip().split(":")
    if not parts or parts == [""]:
        raise UnknownSpec("empty spec")
    head, rest = parts[0], parts[1:]
    if head == "sym":
        frame, rest = _frame_from_spec(rest)
        if rest:
            raise UnknownSpec(f"trailing spec parts {rest!r}")
        return symmetric_dframe(frame)
    if head == "min":
        minus, rest = _frame_from_spec(rest)
        plus, rest = _frame_from_spec(rest)
        if rest:
            raise UnknownSpec(f"trailing spec parts {rest!r}")
        return minimal_dframe(minus, plus)
    raise UnknownSpec(f"unknown constructor {head!r} (expected min or sym)")
