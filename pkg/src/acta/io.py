"""JSON and plain-text formats for monoids, acts, congruences and schemes.

Writers emit one canonical layout (table rows on single lines) so that a
load/dump cycle reproduces the input bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .act import FiniteAct, RightCongruence, is_congruence, validate_act
from .decomposition import Scheme
from .errors import ActaError, IndexOutOfRange
from .monoid import FiniteMonoid, validate_monoid


def format_json(obj: dict) -> str:
    """Two-space layout with each row of a table on one line."""
    lines = []
    items = list(obj.items())
    for k, (key, value) in enumerate(items):
        sep = "," if k < len(items) - 1 else ""
        if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
            rows = [f"    {json.dumps(r, ensure_ascii=False)}" for r in value]
            lines.append(f"  {json.dumps(key)}: [\n" + ",\n".join(rows) + f"\n  ]{sep}")
        elif isinstance(value, dict):
            inner = format_json(value).replace("\n", "\n  ")
            lines.append(f"  {json.dumps(key)}: {inner}{sep}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}{sep}")
    return "{\n" + "\n".join(lines) + "\n}"


def monoid_to_json(m: FiniteMonoid) -> dict:
    return {"order": m.order, "elements": list(m.names), "table": [list(r) for r in m.table]}


def monoid_from_json(d: dict) -> FiniteMonoid:
    try:
        table = d["table"]
    except (KeyError, TypeError):
        raise ActaError("monoid JSON needs a 'table'") from None
    if "order" in d and d["order"] != len(table):
        raise IndexOutOfRange("'order' disagrees with the table")
    return validate_monoid(table, d.get("elements"))


def monoid_to_text(m: FiniteMonoid) -> str:
    return f"{m.order}\n" + "".join(" ".join(map(str, r)) + "\n" for r in m.table)


def monoid_from_text(text: str) -> FiniteMonoid:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ActaError("empty monoid file")
    try:
        n = int(rows[0][0])
        table = [[int(v) for v in r] for r in rows[1:]]
    except ValueError:
        raise ActaError("plain-text monoid must contain integers only") from None
    if len(rows[0]) != 1 or len(table) != n:
        raise IndexOutOfRange("plain-text monoid: first line n, then n rows")
    return validate_monoid(table)


def dump_monoid(m: FiniteMonoid, fmt: str = "json") -> str:
    if fmt == "text":
        return monoid_to_text(m)
    return format_json(monoid_to_json(m)) + "\n"


def load_monoid(text: str) -> tuple[FiniteMonoid, str]:
    """Parse either format; returns the monoid and the detected format."""
    if text.lstrip().startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ActaError(f"bad monoid JSON: {e}") from None
        return monoid_from_json(d), "json"
    return monoid_from_text(text), "text"


def read_monoid(path) -> FiniteMonoid:
    return load_monoid(Path(path).read_text())[0]


def act_to_json(a: FiniteAct, inline_monoid: bool = True) -> dict:
    d = {}
    if inline_monoid:
        d["monoid"] = monoid_to_json(a.monoid)
    d.update({"size": a.size, "elements": list(a.names), "action": [list(r) for r in a.action]})
    return d


def act_from_json(d: dict, monoid: FiniteMonoid | None = None, base_dir=None) -> FiniteAct:
    """Load an act; ``monoid`` overrides or supplies the monoid field."""
    ref = d.get("monoid")
    inner = None
    if isinstance(ref, dict):
        inner = monoid_from_json(ref)
    elif isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        inner = read_monoid(path)
    if monoid is None:
        monoid = inner
    elif inner is not None and inner.table != monoid.table:
        raise ActaError("act file names a different monoid")
    if monoid is None:
        raise ActaError("act has no monoid")
    if "action" not in d:
        raise ActaError("act JSON needs an 'action'")
    if "size" in d and d["size"] != len(d["action"]):
        raise IndexOutOfRange("'size' disagrees with the action table")
    return validate_act(monoid, d["action"], d.get("elements"))


def dump_act(a: FiniteAct, inline_monoid: bool = True) -> str:
    return format_json(act_to_json(a, inline_monoid)) + "\n"


def read_act(path, monoid: FiniteMonoid | None = None) -> FiniteAct:
    path = Path(path)
    try:
        d = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ActaError(f"bad act JSON: {e}") from None
    return act_from_json(d, monoid, base_dir=path.parent)


def congruence_to_json(rho: RightCongruence) -> dict:
    return {"blocks": rho.blocks}


def congruence_from_json(d: dict, act: FiniteAct) -> RightCongruence:
    block_of = [None] * act.size
    for b, block in enumerate(d["blocks"]):
        for x in block:
            if not 0 <= x < act.size or block_of[x] is not None:
                raise IndexOutOfRange(f"element {x} misplaced in blocks")
            block_of[x] = b
    if None in block_of:
        raise IndexOutOfRange("blocks do not cover the carrier")
    # renumber densely by least element
    ids = {}
    dense = tuple(ids.setdefault(b, len(ids)) for b in block_of)
    if not is_congruence(act, dense):
        raise ActaError("blocks are not a right congruence")
    return RightCongruence(act, dense)


def scheme_to_json(s: Scheme) -> dict:
    return {"from": s.source, "to": s.target, "steps": [list(t) for t in s.steps]}


def scheme_from_json(d: dict) -> Scheme:
    return Scheme(d["from"], d["to"], tuple(tuple(t) for t in d["steps"]))

