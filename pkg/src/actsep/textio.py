"""Bit-exact text formats for monoids, acts, and congruence certificates.

All files are ASCII with LF line endings; lines starting with `#` and blank
lines are ignored on input.  Writers always emit a labels line when labels
are present and never otherwise, so write/parse round-trips byte-identically.
"""

from __future__ import annotations

from .acts import FiniteAct, PartialAct, act_from_table, partial_act_from_table
from .congruences import Congruence, verify_congruence
from .errors import InvalidSpec, MalformedTable
from .monoids import FiniteMonoid, monoid_from_table
from .partitions import partition_from_blocks
from .separability import SeparationCertificate, make_certificate


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.split("\n"):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        out.append(line)
    return out


def _expect(tokens: list[str], keyword: str, arity: int | None) -> list[str]:
    if not tokens or tokens[0] != keyword:
        raise MalformedTable(f"expected {keyword!r} line, found {' '.join(tokens) or 'nothing'!r}")
    if arity is not None and len(tokens) != arity + 1:
        raise MalformedTable(f"{keyword!r} line takes {arity} argument(s)")
    return tokens[1:]


def write_monoid(monoid: FiniteMonoid) -> str:
    lines = [
        f"monoid {monoid.name}",
        f"order {monoid.order}",
        f"identity {monoid.identity}",
    ]
    if monoid.labels is not None:
        lines.append("labels " + " ".join(monoid.labels))
    lines.append("table")
    for row in monoid.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_monoid(text: str) -> FiniteMonoid:
    lines = _content_lines(text)
    if not lines:
        raise MalformedTable("empty monoid file")
    name = _expect(lines[0].split(), "monoid", 1)[0]
    order = int(_expect(lines[1].split(), "order", 1)[0])
    identity = int(_expect(lines[2].split(), "identity", 1)[0])
    pos = 3
    labels = None
    tokens = lines[pos].split()
    if tokens and tokens[0] == "labels":
        labels = tokens[1:]
        if len(labels) != order:
            raise MalformedTable(f"{len(labels)} labels for order {order}")
        pos += 1
    _expect(lines[pos].split(), "table", 0)
    pos += 1
    rows = lines[pos : pos + order]
    if len(rows) != order:
        raise MalformedTable(f"table needs {order} rows, found {len(rows)}")
    table = [[int(v) for v in row.split()] for row in rows]
    return monoid_from_table(table, identity, labels, name=name)


def write_act(act: FiniteAct | PartialAct) -> str:
    partial = isinstance(act, PartialAct)
    lines = [
        f"{'partialact' if partial else 'act'} {act.name}",
        f"monoid {act.monoid.name}",
        f"size {act.size}",
    ]
    if act.labels is not None:
        lines.append("labels " + " ".join(act.labels))
    lines.append("table")
    for row in act.table:
        lines.append(" ".join("-" if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_act(text: str, monoid: FiniteMonoid) -> FiniteAct | PartialAct:
    lines = _content_lines(text)
    if not lines:
        raise MalformedTable("empty act file")
    head = lines[0].split()
    if head[0] not in ("act", "partialact") or len(head) != 2:
        raise MalformedTable("first line must be 'act <name>' or 'partialact <name>'")
    partial = head[0] == "partialact"
    name = head[1]
    declared = _expect(lines[1].split(), "monoid", 1)[0]
    if declared != monoid.name:
        raise InvalidSpec(
            f"act declares monoid {declared!r} but was resolved against {monoid.name!r}"
        )
    size = int(_expect(lines[2].split(), "size", 1)[0])
    pos = 3
    labels = None
    tokens = lines[pos].split()
    if tokens and tokens[0] == "labels":
        labels = tokens[1:]
        if len(labels) != size:
            raise MalformedTable(f"{len(labels)} labels for size {size}")
        pos += 1
    _expect(lines[pos].split(), "table", 0)
    pos += 1
    rows = lines[pos : pos + size]
    if len(rows) != size:
        raise MalformedTable(f"table needs {size} rows, found {len(rows)}")

    def cell(v: str) -> int | None:
        return None if v == "-" else int(v)

    table = [[cell(v) for v in row.split()] for row in rows]
    if partial:
        return partial_act_from_table(monoid, table, labels, name=name)
    if any(v is None for row in table for v in row):
        raise MalformedTable("undefined entries in a total act file")
    return act_from_table(monoid, table, labels, name=name)  # type: ignore[arg-type]


def write_congruence(congruence: Congruence) -> str:
    blocks = congruence.blocks()
    lines = [
        f"congruence {congruence.act.name}",
        f"classes {len(blocks)}",
    ]
    for block in blocks:
        lines.append(" ".join(str(x) for x in block))
    return "\n".join(lines) + "\n"


def parse_congruence(text: str, act: FiniteAct) -> Congruence:
    lines = _content_lines(text)
    declared = _expect(lines[0].split(), "congruence", 1)[0]
    if declared != act.name:
        raise InvalidSpec(f"congruence declares act {declared!r}, expected {act.name!r}")
    count = int(_expect(lines[1].split(), "classes", 1)[0])
    rows = lines[2 : 2 + count]
    if len(rows) != count:
        raise MalformedTable(f"expected {count} class lines, found {len(rows)}")
    blocks = [[int(v) for v in row.split()] for row in rows]
    return verify_congruence(act, partition_from_blocks(act.size, blocks))


def write_certificate(cert: SeparationCertificate) -> str:
    forbidden = " ".join(str(x) for x in sorted(cert.forbidden))
    return f"separates {cert.element} from {forbidden}\n" + write_congruence(cert.congruence)


def parse_certificate(text: str, act: FiniteAct) -> SeparationCertificate:
    lines = _content_lines(text)
    tokens = lines[0].split()
    if len(tokens) < 4 or tokens[0] != "separates" or tokens[2] != "from":
        raise MalformedTable("certificate must start with 'separates <i> from <j> ...'")
    element = int(tokens[1])
    forbidden = [int(v) for v in tokens[3:]]
    congruence = parse_congruence("\n".join(lines[1:]) + "\n", act)
    return make_certificate(act, element, forbidden, congruence)
