"""Finite and partial right acts over a finite monoid.

An act table has one row per carrier element and one column per monoid
element; entry (a, m) is the index of a*m.  Partial acts use None for
undefined entries and only constrain triples whose entries are all defined,
which is what makes windowed truncations of infinite acts sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AssociativityViolation,
    ComplementNotIdeal,
    EmptyGeneratorSet,
    IdentityLawViolation,
    InvalidSpec,
    MalformedTable,
    MonoidMismatch,
    NotARetraction,
    NotASubact,
)
from .monoids import FiniteMonoid
from .partitions import Partition, partition_from_assignment


@dataclass(frozen=True)
class FiniteAct:
    monoid: FiniteMonoid
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str = "A"

    @property
    def size(self) -> int:
        return len(self.table)

    def act(self, a: int, m: int) -> int:
        return self.table[a][m]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def carrier(self) -> range:
        return range(self.size)

    def orbit(self, a: int) -> frozenset[int]:
        """The cyclic subact <a> = aM (contains a)."""
        return frozenset(self.table[a])

    @cached_property
    def zeros(self) -> tuple[int, ...]:
        return tuple(a for a in self.carrier() if all(v == a for v in self.table[a]))


@dataclass(frozen=True)
class PartialAct:
    monoid: FiniteMonoid
    table: tuple[tuple[int | None, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str = "P"

    @property
    def size(self) -> int:
        return len(self.table)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def carrier(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class ActHomomorphism:
    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]


def _check_labels(labels: Sequence[str] | None, size: int) -> tuple[str, ...] | None:
    if labels is None:
        return None
    if len(labels) != size:
        raise MalformedTable(f"{len(labels)} labels for carrier of size {size}")
    for lab in labels:
        if not lab or any(c.isspace() for c in lab):
            raise MalformedTable(f"label {lab!r} empty or contains whitespace")
    return tuple(labels)


def act_from_table(
    monoid: FiniteMonoid,
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "A",
) -> FiniteAct:
    """Validate both act axioms exhaustively: a*1 = a and a*(mn) = (a*m)*n."""
    size = len(table)
    if size == 0:
        raise MalformedTable("empty carrier")
    n = monoid.order
    for row in table:
        if len(row) != n:
            raise MalformedTable(f"row of length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < size:
                raise MalformedTable(f"entry {v!r} out of carrier range [0, {size})")
    e = monoid.identity
    for a in range(size):
        if table[a][e] != a:
            raise IdentityLawViolation(a)
    mt = monoid.table
    for a in range(size):
        row = table[a]
        for m in range(n):
            am = table[row[m]]
            prods = mt[m]
            for k in range(n):
                if row[prods[k]] != am[k]:
                    raise AssociativityViolation(a, m, k)
    return FiniteAct(monoid, tuple(tuple(r) for r in table), _check_labels(labels, size), name)


def partial_act_from_table(
    monoid: FiniteMonoid,
    table: Sequence[Sequence[int | None]],
    labels: Sequence[str] | None = None,
    name: str = "P",
) -> PartialAct:
    """Validate a partial act: defined entries in range, a*1 = a whenever
    defined, and a*(mn) = (a*m)*n whenever all three entries are defined."""
    size = len(table)
    if size == 0:
        raise MalformedTable("empty carrier")
    n = monoid.order
    for row in table:
        if len(row) != n:
            raise MalformedTable(f"row of length {len(row)}, expected {n}")
        for v in row:
            if v is not None and (not isinstance(v, int) or not 0 <= v < size):
                raise MalformedTable(f"entry {v!r} out of carrier range [0, {size})")
    e = monoid.identity
    for a in range(size):
        if table[a][e] is not None and table[a][e] != a:
            raise IdentityLawViolation(a)
    mt = monoid.table
    for a in range(size):
        row = table[a]
        for m in range(n):
            x = row[m]
            if x is None:
                continue
            for k in range(n):
                y = table[x][k]
                z = row[mt[m][k]]
                if y is not None and z is not None and y != z:
                    raise AssociativityViolation(a, m, k)
    return PartialAct(monoid, tuple(tuple(r) for r in table), _check_labels(labels, size), name)


def act_homomorphism(source: FiniteAct, target: FiniteAct, mapping: Sequence[int]) -> ActHomomorphism:
    if source.monoid.table != target.monoid.table:
        raise MonoidMismatch("homomorphism endpoints live over different monoids")
    if len(mapping) != source.size:
        raise MalformedTable("homomorphism map has wrong length")
    for v in mapping:
        if not 0 <= v < target.size:
            raise MalformedTable(f"homomorphism image {v} out of range")
    for a in source.carrier():
        for m in source.monoid.elements():
            if mapping[source.table[a][m]] != target.table[mapping[a]][m]:
                raise InvalidSpec(f"not equivariant at (a={a}, m={m})")
    return ActHomomorphism(source, target, tuple(mapping))


def regular_act(monoid: FiniteMonoid, name: str | None = None) -> FiniteAct:
    """The monoid acting on itself by right multiplication."""
    return FiniteAct(monoid, monoid.table, monoid.labels, name or monoid.name)


def is_faithful(act: FiniteAct) -> bool:
    cols = {tuple(act.table[a][m] for a in act.carrier()) for m in act.monoid.elements()}
    return len(cols) == act.monoid.order


# ---------------------------------------------------------------------------
# subacts


def subact_violation(act: FiniteAct, subset: Iterable[int]) -> tuple[int, int, int] | None:
    """None if subset is a subact, else a witness (b, m, image outside)."""
    sub = set(subset)
    if not sub:
        return (-1, -1, -1)
    for b in sorted(sub):
        for m in act.monoid.elements():
            img = act.table[b][m]
            if img not in sub:
                return (b, m, img)
    return None


def require_subact(act: FiniteAct, subset: Iterable[int]) -> frozenset[int]:
    sub = frozenset(subset)
    witness = subact_violation(act, sub)
    if witness is not None:
        raise NotASubact(*witness)
    return sub


def subact_generated(act: FiniteAct, generators: Iterable[int]) -> frozenset[int]:
    """<U> = UM, the least subact containing U; one closure step suffices
    because (um)n = u(mn)."""
    gens = set(generators)
    if not gens:
        raise EmptyGeneratorSet("generating set must be non-empty")
    out: set[int] = set()
    for u in gens:
        out.update(act.table[u])
    return frozenset(out)


def cyclic_subacts(act: FiniteAct) -> tuple[frozenset[int], ...]:
    """Distinct orbits <x>, ordered by least generator."""
    seen: dict[frozenset[int], int] = {}
    for x in act.carrier():
        orb = act.orbit(x)
        if orb not in seen:
            seen[orb] = x
    return tuple(sorted(seen, key=lambda o: seen[o]))


def subacts(act: FiniteAct, cap: int = 1 << 16) -> tuple[frozenset[int], ...]:
    """All subacts, as unions of the distinct cyclic subacts."""
    from .errors import SearchSpaceTooLarge

    orbits = cyclic_subacts(act)
    if 1 << len(orbits) > cap:
        raise SearchSpaceTooLarge(1 << len(orbits), cap)
    seen: set[frozenset[int]] = set()
    out: list[frozenset[int]] = []
    for mask in range(1, 1 << len(orbits)):
        acc: frozenset[int] = frozenset()
        for b, orb in enumerate(orbits):
            if mask >> b & 1:
                acc |= orb
        if acc not in seen:
            seen.add(acc)
            out.append(acc)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(out)


def subact_as_act(act: FiniteAct, subset: Iterable[int], name: str = "B") -> tuple[FiniteAct, tuple[int, ...]]:
    """Re-index a subact as an act of its own; returns (act, embedding)."""
    sub = require_subact(act, subset)
    elems = tuple(sorted(sub))
    pos = {a: i for i, a in enumerate(elems)}
    table = [[pos[act.table[a][m]] for m in act.monoid.elements()] for a in elems]
    labels = tuple(act.label(a) for a in elems) if act.labels else None
    return FiniteAct(act.monoid, tuple(tuple(r) for r in table), labels, name), elems


# ---------------------------------------------------------------------------
# preorder, Green's relation, decomposition


def preorder_and_green(act: FiniteAct) -> tuple[tuple[tuple[bool, ...], ...], tuple[tuple[int, ...], ...]]:
    """(leq, R-classes): a <= b iff <a> is contained in <b>, i.e. a in bM;
    the R-classes are the symmetrization, listed by least member."""
    orbits = [act.orbit(a) for a in act.carrier()]
    leq = tuple(
        tuple(a in orbits[b] for b in act.carrier()) for a in act.carrier()
    )
    assignment = [-1] * act.size
    blocks: list[list[int]] = []
    for a in act.carrier():
        if assignment[a] != -1:
            continue
        bid = len(blocks)
        block = [a]
        assignment[a] = bid
        for b in range(a + 1, act.size):
            if assignment[b] == -1 and orbits[a] == orbits[b]:
                assignment[b] = bid
                block.append(b)
        blocks.append(block)
    return leq, tuple(tuple(b) for b in blocks)


def decompose(act: FiniteAct) -> tuple[tuple[int, ...], ...]:
    """The unique partition into indecomposable subacts: connected components
    of the undirected graph with edges {a, a*m}."""
    parent = list(act.carrier())

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in act.carrier():
        for v in act.table[a]:
            ra, rv = find(a), find(v)
            if ra != rv:
                parent[max(ra, rv)] = min(ra, rv)
    groups: dict[int, list[int]] = {}
    for a in act.carrier():
        groups.setdefault(find(a), []).append(a)
    return tuple(tuple(groups[r]) for r in sorted(groups))


# ---------------------------------------------------------------------------
# quotients, unions, coset acts


def rees_quotient(act: FiniteAct, subset: Iterable[int]) -> tuple[FiniteAct, ActHomomorphism]:
    """Collapse the subact B to a fresh zero 0_B appended at the end of the
    carrier; also returns the projection homomorphism."""
    sub = require_subact(act, subset)
    keep = [a for a in act.carrier() if a not in sub]
    zero = len(keep)
    proj = [0] * act.size
    for i, a in enumerate(keep):
        proj[a] = i
    for b in sub:
        proj[b] = zero
    table = [[proj[act.table[a][m]] for m in act.monoid.elements()] for a in keep]
    table.append([zero] * act.monoid.order)
    labels = None
    if act.labels:
        labels = tuple(act.label(a) for a in keep) + ("0_B",)
    quot = FiniteAct(act.monoid, tuple(tuple(r) for r in table), labels, f"{act.name}/B")
    return quot, ActHomomorphism(act, quot, tuple(proj))


def disjoint_union(parts: Sequence[FiniteAct], name: str = "U") -> tuple[FiniteAct, tuple[ActHomomorphism, ...]]:
    if not parts:
        raise InvalidSpec("disjoint union needs at least one part")
    monoid = parts[0].monoid
    for p in parts[1:]:
        if p.monoid.table != monoid.table:
            raise MonoidMismatch("parts act over different monoids")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.size
    table: list[tuple[int, ...]] = []
    labels: list[str] = []
    for idx, p in enumerate(parts):
        off = offsets[idx]
        for a in p.carrier():
            table.append(tuple(v + off for v in p.table[a]))
            lab = p.label(a)
            labels.append(lab if len(parts) == 1 else f"{idx}:{lab}")
    union = FiniteAct(monoid, tuple(table), tuple(labels), name)
    injections = tuple(
        ActHomomorphism(p, union, tuple(a + offsets[i] for a in p.carrier()))
        for i, p in enumerate(parts)
    )
    return union, injections


def coset_act(group: FiniteMonoid, subgroup: Iterable[int], name: str = "G/H") -> FiniteAct:
    """The act of a group on the right cosets of a subgroup, with labels H*g."""
    if not group.is_group:
        raise InvalidSpec("coset acts need a group")
    sub = sorted(set(subgroup))
    pos = set(sub)
    if group.identity not in pos:
        raise InvalidSpec("subgroup must contain the identity")
    for a in sub:
        if group.inverse(a) not in pos or any(group.table[a][b] not in pos for b in sub):
            raise InvalidSpec("subset is not a subgroup")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for g in group.elements():
        if g in coset_of:
            continue
        cid = len(reps)
        reps.append(g)
        for h in sub:
            coset_of[group.table[h][g]] = cid
    table = [
        [coset_of[group.table[reps[c]][g]] for g in group.elements()]
        for c in range(len(reps))
    ]
    labels = [f"H*{group.label(r)}" for r in reps]
    return act_from_table(group, table, labels, name=name)


# ---------------------------------------------------------------------------
# transports along submonoids and retractions


def _check_embedding(sub: FiniteMonoid, sup: FiniteMonoid, embedding: Sequence[int]) -> None:
    if len(embedding) != sub.order or len(set(embedding)) != sub.order:
        raise InvalidSpec("embedding must be injective and total on the submonoid")
    for v in embedding:
        if not 0 <= v < sup.order:
            raise InvalidSpec(f"embedding image {v} out of range")
    if embedding[sub.identity] != sup.identity:
        raise InvalidSpec("embedding must send identity to identity")
    for a in sub.elements():
        for b in sub.elements():
            if sup.table[embedding[a]][embedding[b]] != embedding[sub.table[a][b]]:
                raise InvalidSpec(f"embedding not a homomorphism at ({a}, {b})")


def transport_along_ideal_complement(
    act: FiniteAct,
    monoid: FiniteMonoid,
    embedding: Sequence[int],
    name: str | None = None,
) -> FiniteAct:
    """Extend an N-act to an M-act on A plus a fresh zero: a*m stays inside A
    when m comes from N, everything else lands on the zero.  Requires the
    complement of N's image to be a two-sided ideal of M."""
    sub = act.monoid
    _check_embedding(sub, monoid, embedding)
    image = set(embedding)
    preim = {embedding[n]: n for n in sub.elements()}
    for x in monoid.elements():
        if x in image:
            continue
        for m in monoid.elements():
            if monoid.table[x][m] in image:
                raise ComplementNotIdeal(x, m, monoid.table[x][m])
            if monoid.table[m][x] in image:
                raise ComplementNotIdeal(m, x, monoid.table[m][x])
    zero = act.size
    table = []
    for a in act.carrier():
        table.append(
            tuple(
                act.table[a][preim[m]] if m in preim else zero
                for m in monoid.elements()
            )
        )
    table.append(tuple(zero for _ in monoid.elements()))
    labels = None
    if act.labels:
        labels = tuple(act.labels) + ("0",)
    return act_from_table(monoid, table, labels, name=name or f"{act.name}+0")


def transport_along_retraction(
    act: FiniteAct,
    monoid: FiniteMonoid,
    embedding: Sequence[int],
    retraction: Sequence[int],
    name: str | None = None,
) -> FiniteAct:
    """Pull an N-act back along a retraction phi: M -> N (x*m = x*(m phi)).
    `retraction[m]` is an N-index; it must be a homomorphism fixing N."""
    sub = act.monoid
    _check_embedding(sub, monoid, embedding)
    if len(retraction) != monoid.order:
        raise NotARetraction("retraction must be total on the big monoid")
    for v in retraction:
        if not 0 <= v < sub.order:
            raise NotARetraction(f"retraction image {v} is not a submonoid element")
    for m in monoid.elements():
        for n in monoid.elements():
            if retraction[monoid.table[m][n]] != sub.table[retraction[m]][retraction[n]]:
                raise NotARetraction(f"not a homomorphism at ({m}, {n})")
    for n in sub.elements():
        if retraction[embedding[n]] != n:
            raise NotARetraction(f"does not fix submonoid element {n}")
    table = [
        tuple(act.table[a][retraction[m]] for m in monoid.elements())
        for a in act.carrier()
    ]
    return act_from_table(monoid, table, act.labels, name=name or act.name)


# ---------------------------------------------------------------------------
# closure on partial acts (forcing arguments)


def closure_partial(partial: PartialAct, seeds: Iterable[tuple[int, int]]) -> Partition:
    """Least equivalence containing the seeds and closed under every defined
    action entry: x ~ y forces x*m ~ y*m whenever both are defined.

    Union-find where each class root carries its defined images per column;
    merging two classes merges their image maps and enqueues collisions, so
    the fixed point is independent of processing order.
    """
    size = partial.size
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    images: list[dict[int, int]] = [
        {m: v for m, v in enumerate(row) if v is not None} for row in partial.table
    ]
    pending = [(a, b) for a, b in seeds]
    for a, b in pending:
        if not (0 <= a < size and 0 <= b < size):
            raise InvalidSpec(f"seed ({a}, {b}) out of range")
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if len(images[ra]) < len(images[rb]):
            ra, rb = rb, ra
        parent[rb] = ra
        big, small = images[ra], images[rb]
        for m, v in small.items():
            if m in big:
                pending.append((big[m], v))
            else:
                big[m] = v
        images[rb] = {}
    return partition_from_assignment([find(x) for x in range(size)])


def is_closed_partition(partial: PartialAct, partition: Partition) -> tuple[int, int, int] | None:
    """None if the partition is compatible with every defined entry, else a
    witness (a, b, m) where a ~ b but the defined images split."""
    if partition.size != partial.size:
        raise InvalidSpec("partition size does not match the carrier")
    blocks = partition.blocks()
    for block in blocks:
        for i, a in enumerate(block):
            for b in block[i + 1 :]:
                for m in partial.monoid.elements():
                    u, v = partial.table[a][m], partial.table[b][m]
                    if u is not None and v is not None and not partition.same(u, v):
                        return (a, b, m)
    return None
