"""Separation machinery: bracket sets, the bracket-equality congruence,
minimal separation searches with certificates, the four condition checkers,
the named witness constructions (proofs run as code), and the act/monoid
correspondence checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .acts import (
    FiniteAct,
    cyclic_subacts,
    preorder_and_green,
    regular_act,
    require_subact,
    subact_as_act,
    subacts,
)
from .congruences import (
    Congruence,
    DEFAULT_SEARCH_CAP,
    enumerate_congruences,
    equality_congruence,
    quotient,
    quotient_monoid,
    two_sided_violation,
    verify_congruence,
)
from .errors import (
    EmptyForbiddenSet,
    InternalInvariantViolation,
    InvalidSpec,
    MonoidMismatch,
    NotAZero,
    NotACongruence,
    NotClifford,
    NotComparable,
    NotNormalized,
    NotTwoSidedCongruence,
    PreconditionViolated,
    RRelated,
    XMeetsBlock,
)
from .monoids import (
    FiniteMonoid,
    ReesMatrixSpec,
    rees_element_index,
    rees_matrix_monoid,
    right_ideals,
)
from .partitions import partition_from_assignment

DEFAULT_SUBACT_CAP = 1 << 16

CONDITIONS = ("RF", "WSS", "SSS", "CS")


# ---------------------------------------------------------------------------
# bracket sets and the bracket-equality congruence


@dataclass(frozen=True)
class BracketProfile:
    """For a fixed element a, the sets [a, b] = {m : a = b*m} for every b."""

    act: FiniteAct
    element: int
    brackets: tuple[frozenset[int], ...]

    @property
    def distinct_count(self) -> int:
        return len(set(self.brackets))


def bracket_profile(act: FiniteAct, a: int) -> BracketProfile:
    if not 0 <= a < act.size:
        raise InvalidSpec(f"element {a} out of carrier range")
    brackets = tuple(
        frozenset(m for m in act.monoid.elements() if act.table[b][m] == a)
        for b in act.carrier()
    )
    return BracketProfile(act, a, brackets)


def sigma_a(act: FiniteAct, a: int) -> Congruence:
    """Partition the carrier by bracket-set equality.  Always a congruence
    with {a} as the block of a; a verification failure is a bug."""
    profile = bracket_profile(act, a)
    seen: dict[frozenset[int], int] = {}
    assignment = []
    for br in profile.brackets:
        if br not in seen:
            seen[br] = len(seen)
        assignment.append(seen[br])
    try:
        cong = verify_congruence(act, partition_from_assignment(assignment))
    except Exception as exc:  # pragma: no cover - theory guarantees compatibility
        raise InternalInvariantViolation(f"bracket partition not a congruence: {exc}") from exc
    if len(cong.partition.block(a)) != 1:
        raise InternalInvariantViolation("bracket congruence block of a is not a singleton")
    return cong


# ---------------------------------------------------------------------------
# separation certificates


@dataclass(frozen=True)
class SeparationCertificate:
    act: FiniteAct
    element: int
    forbidden: frozenset[int]
    congruence: Congruence

    @property
    def quotient_size(self) -> int:
        return self.congruence.index


def make_certificate(
    act: FiniteAct, element: int, forbidden: Iterable[int], congruence: Congruence
) -> SeparationCertificate:
    forb = frozenset(forbidden)
    block_of = congruence.partition.block_of
    for x in forb:
        if block_of[x] == block_of[element]:
            raise InvalidSpec(f"congruence does not separate {element} from {x}")
    return SeparationCertificate(act, element, forb, congruence)


def _separates(congruence: Congruence, element: int, forbidden: frozenset[int]) -> bool:
    block_of = congruence.partition.block_of
    be = block_of[element]
    return all(block_of[x] != be for x in forbidden)


def _check_separation_input(act: FiniteAct, a: int, forbidden: frozenset[int]) -> None:
    if not 0 <= a < act.size:
        raise InvalidSpec(f"element {a} out of carrier range")
    if not forbidden:
        raise EmptyForbiddenSet("the forbidden set must be non-empty")
    for x in forbidden:
        if not 0 <= x < act.size:
            raise InvalidSpec(f"forbidden element {x} out of carrier range")
    if a in forbidden:
        raise InvalidSpec(f"element {a} belongs to the forbidden set")


def separate(
    act: FiniteAct,
    a: int,
    forbidden: Iterable[int],
    max_index: int | None = None,
    cap: int = DEFAULT_SEARCH_CAP,
) -> SeparationCertificate | None:
    """Minimal-index congruence separating a from the forbidden set, ties
    broken by enumeration order; None when no congruence within max_index
    separates.  Unbounded search always succeeds on a finite act because the
    bracket congruence of a separates a from everything else, which also
    bounds the enumeration."""
    forb = frozenset(forbidden)
    _check_separation_input(act, a, forb)
    sigma_bound = sigma_a(act, a).index
    bound = sigma_bound if max_index is None else min(max_index, sigma_bound)
    best: tuple[int, int, Congruence] | None = None
    for rank, cong in enumerate(enumerate_congruences(act, max_index=bound, cap=cap)):
        if _separates(cong, a, forb) and (best is None or cong.index < best[0]):
            best = (cong.index, rank, cong)
    if best is None:
        return None
    return make_certificate(act, a, forb, best[2])


def minimal_separating_index(
    act: FiniteAct,
    a: int,
    forbidden: Iterable[int],
    cap: int = DEFAULT_SEARCH_CAP,
) -> int:
    cert = separate(act, a, forbidden, cap=cap)
    assert cert is not None  # unbounded search cannot fail on a finite act
    return cert.quotient_size


# ---------------------------------------------------------------------------
# the four condition checkers


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    act: FiniteAct
    holds: bool
    certificates: tuple[SeparationCertificate, ...]
    counterexample: tuple[int, frozenset[int]] | None


def _condition_instances(
    act: FiniteAct, condition: str, subact_cap: int
) -> list[tuple[int, frozenset[int]]]:
    out: list[tuple[int, frozenset[int]]] = []
    if condition == "RF":
        for a in act.carrier():
            for b in range(a + 1, act.size):
                out.append((a, frozenset({b})))
    elif condition == "WSS":
        for sub in cyclic_subacts(act):
            for a in act.carrier():
                if a not in sub:
                    out.append((a, sub))
    elif condition == "SSS":
        for sub in subacts(act, cap=subact_cap):
            for a in act.carrier():
                if a not in sub:
                    out.append((a, sub))
    elif condition == "CS":
        for a in act.carrier():
            rest = frozenset(act.carrier()) - {a}
            if rest:
                out.append((a, rest))
    else:
        raise InvalidSpec(f"unknown condition {condition!r}")
    return out


def check_condition(
    act: FiniteAct,
    condition: str,
    max_index: int | None = None,
    cap: int = DEFAULT_SEARCH_CAP,
    subact_cap: int = DEFAULT_SUBACT_CAP,
) -> ConditionReport:
    """Decide one of RF/WSS/SSS/CS by solving every instance with a minimal
    separation search; the congruence enumeration is shared across instances
    (sound: each instance's optimum is bounded by its bracket congruence)."""
    cond = condition.upper()
    instances = _condition_instances(act, cond, subact_cap)
    if not instances:
        return ConditionReport(cond, act, True, (), None)
    sigma_bounds = {a: sigma_a(act, a).index for a in sorted({a for a, _ in instances})}
    bound = max(sigma_bounds.values())
    if max_index is not None:
        bound = min(bound, max_index)
    ranked = list(enumerate(enumerate_congruences(act, max_index=bound, cap=cap)))
    certificates: list[SeparationCertificate] = []
    for a, forb in instances:
        best: tuple[int, int, Congruence] | None = None
        limit = sigma_bounds[a] if max_index is None else min(max_index, sigma_bounds[a])
        for rank, cong in ranked:
            if cong.index <= limit and _separates(cong, a, forb):
                if best is None or cong.index < best[0]:
                    best = (cong.index, rank, cong)
        if best is None:
            return ConditionReport(cond, act, False, tuple(certificates), (a, forb))
        certificates.append(make_certificate(act, a, forb, best[2]))
    return ConditionReport(cond, act, True, tuple(certificates), None)


# ---------------------------------------------------------------------------
# named witness constructions (the paper's proofs run as code)


def rclass_witness(act: FiniteAct, zero: int, a: int) -> SeparationCertificate:
    """Separate a from a zero via the fibers of x -> (is x*R_i = {zero})_i
    over the monoid's R-classes, with {zero} as its own block."""
    if zero not in act.zeros:
        raise NotAZero(zero)
    if a == zero or not 0 <= a < act.size:
        raise InvalidSpec("element to separate must differ from the zero")
    rclasses = act.monoid.r_classes
    keys: list[tuple] = []
    for x in act.carrier():
        if x == zero:
            keys.append(("zero",))
        else:
            row = act.table[x]
            keys.append(tuple(all(row[r] == zero for r in rc) for rc in rclasses))
    seen: dict[tuple, int] = {}
    assignment = []
    for key in keys:
        if key not in seen:
            seen[key] = len(seen)
        assignment.append(seen[key])
    cong = verify_congruence(act, partition_from_assignment(assignment))
    return make_certificate(act, a, {zero}, cong)


def is_clifford(monoid: FiniteMonoid) -> bool:
    """Inverse monoid with central idempotents: regular, unique inverses,
    idempotents commuting with everything (all checked exhaustively)."""
    t = monoid.table
    for m in monoid.elements():
        inverses = [
            x
            for x in monoid.elements()
            if t[t[m][x]][m] == m and t[t[x][m]][x] == x
        ]
        if len(inverses) != 1:
            return False
    for e in monoid.idempotents:
        if any(t[e][x] != t[x][e] for x in monoid.elements()):
            return False
    return True


def clifford_witness(act: FiniteAct, a: int, b: int) -> SeparationCertificate:
    """Over a Clifford monoid, separate two non-R-related elements by the
    two-block congruence {x : a <= x} | {x : a is not below x}."""
    if not is_clifford(act.monoid):
        raise NotClifford("the acting monoid is not a Clifford monoid")
    leq, _ = preorder_and_green(act)
    if leq[a][b] and leq[b][a]:
        raise RRelated(a, b)
    if leq[a][b]:
        a, b = b, a
    assignment = [0 if leq[a][x] else 1 for x in act.carrier()]
    seen: dict[int, int] = {}
    normalized = []
    for v in assignment:
        if v not in seen:
            seen[v] = len(seen)
        normalized.append(seen[v])
    cong = verify_congruence(act, partition_from_assignment(normalized))
    return make_certificate(act, a, {b}, cong)


def _completely_simple_violation(monoid: FiniteMonoid) -> str | None:
    """None when M minus its identity is a completely simple subsemigroup."""
    e = monoid.identity
    s_elems = [x for x in monoid.elements() if x != e]
    if not s_elems:
        return "no elements besides the identity"
    t = monoid.table
    sset = set(s_elems)
    for x in s_elems:
        for y in s_elems:
            if t[x][y] == e:
                return f"products of non-identity elements reach the identity: {x}*{y}"
    full = frozenset(s_elems)
    for s in s_elems:
        ideal = {s}
        ideal.update(t[s][y] for y in s_elems)
        ideal.update(t[y][s] for y in s_elems)
        for x in s_elems:
            xs = t[x][s]
            ideal.update(t[xs][y] for y in s_elems)
        if frozenset(ideal) != full:
            return f"principal ideal of {s} is proper, the semigroup part is not simple"
    return None


def rees_cyclic_sss_witness(
    monoid: FiniteMonoid,
    rho: Congruence,
    zero: int | None = None,
    element: int | None = None,
) -> SeparationCertificate:
    """On a cyclic act M/rho with a zero, over S^1 with S completely simple:
    the three-block congruence {[1]}, {0}, rest.  Also asserts that the class
    of the identity is a singleton, which the completely simple structure
    forces whenever such a zero exists."""
    violation = _completely_simple_violation(monoid)
    if violation is not None:
        raise PreconditionViolated(violation)
    if rho.act.table != monoid.table:
        raise NotACongruence("rho must be a right congruence on the monoid")
    act, proj = quotient(rho.act, rho)
    one = proj.map[monoid.identity]
    candidates = [z for z in act.zeros if z != one]
    if zero is not None:
        if zero not in candidates:
            raise PreconditionViolated(f"{zero} is not a zero distinct from the identity class")
    else:
        if not candidates:
            raise PreconditionViolated("the quotient act has no zero distinct from [1]")
        zero = candidates[0]
    if element is None:
        element = one
    if element == zero:
        raise InvalidSpec("element to separate must differ from the zero")
    if len(rho.partition.block(monoid.identity)) != 1:
        raise InternalInvariantViolation("the class of the identity is not a singleton")
    if act.size < 3:
        return make_certificate(act, element, {zero}, equality_congruence(act))
    assignment = [0 if x == one else 1 if x == zero else 2 for x in act.carrier()]
    seen: dict[int, int] = {}
    normalized = []
    for v in assignment:
        if v not in seen:
            seen[v] = len(seen)
        normalized.append(seen[v])
    cong = verify_congruence(act, partition_from_assignment(normalized))
    return make_certificate(act, element, {zero}, cong)


def _validate_union_blocks(
    act: FiniteAct, blocks: Sequence[Iterable[int]]
) -> list[frozenset[int]]:
    out = [require_subact(act, block) for block in blocks]
    covered: set[int] = set()
    for block in out:
        if covered & block:
            raise InvalidSpec("union blocks overlap")
        covered |= block
    if covered != set(act.carrier()):
        raise InvalidSpec("union blocks do not cover the carrier")
    return out


def disjoint_union_witness(
    act: FiniteAct,
    blocks: Sequence[Iterable[int]],
    a: int,
    forbidden: Iterable[int],
) -> SeparationCertificate:
    """When the forbidden set misses the block of a: the two-block congruence
    A_i | rest separates.  Otherwise raises XMeetsBlock; see
    disjoint_union_fallback for the general construction."""
    forb = frozenset(forbidden)
    _check_separation_input(act, a, forb)
    parts = _validate_union_blocks(act, blocks)
    mine = next(block for block in parts if a in block)
    overlap = forb & mine
    if overlap:
        raise XMeetsBlock(min(overlap))
    assignment = [0 if x in mine else 1 for x in act.carrier()]
    seen: dict[int, int] = {}
    normalized = []
    for v in assignment:
        if v not in seen:
            seen[v] = len(seen)
        normalized.append(seen[v])
    cong = verify_congruence(act, partition_from_assignment(normalized))
    return make_certificate(act, a, forb, cong)


def disjoint_union_fallback(
    act: FiniteAct,
    blocks: Sequence[Iterable[int]],
    a: int,
    forbidden: Iterable[int],
    cap: int = DEFAULT_SEARCH_CAP,
) -> SeparationCertificate:
    """General case: separate inside the block of a, then extend by sending
    the rest of the act to an adjoined sink class."""
    forb = frozenset(forbidden)
    _check_separation_input(act, a, forb)
    parts = _validate_union_blocks(act, blocks)
    mine = next(block for block in parts if a in block)
    inside = forb & mine
    if not inside:
        return disjoint_union_witness(act, blocks, a, forb)
    sub_act, embedding = subact_as_act(act, mine)
    pos = {x: i for i, x in enumerate(embedding)}
    sub_cert = separate(sub_act, pos[a], {pos[x] for x in inside}, cap=cap)
    assert sub_cert is not None
    sub_blocks = sub_cert.congruence.partition.block_of
    keys = [
        ("in", sub_blocks[pos[x]]) if x in pos else ("out",) for x in act.carrier()
    ]
    seen: dict[tuple, int] = {}
    assignment = []
    for key in keys:
        if key not in seen:
            seen[key] = len(seen)
        assignment.append(seen[key])
    cong = verify_congruence(act, partition_from_assignment(assignment))
    return make_certificate(act, a, forb, cong)


# ---------------------------------------------------------------------------
# bracket decomposition over Rees matrix monoids


@dataclass(frozen=True)
class ReesBracketDecomposition:
    """[a, b] = U_b x J' over a normalized Rees matrix monoid; z_b is the
    group slice used by the finite-rank argument (None when either element
    has only the identity as a representative)."""

    u_b: frozenset[tuple[int, int]]
    j_prime: frozenset[int]
    z_b: frozenset[int] | None


def rees_bracket_decomposition(
    act: FiniteAct,
    spec: ReesMatrixSpec,
    a: int,
    b: int,
    projection: Sequence[int] | None = None,
) -> ReesBracketDecomposition:
    monoid = rees_matrix_monoid(spec)
    if act.monoid.table != monoid.table:
        raise MonoidMismatch("act is not over the Rees matrix monoid of this spec")
    e = spec.group.identity
    anchor = next(
        (
            i
            for i in range(spec.rows)
            if all(spec.sandwich[j][i] == e for j in range(spec.cols))
        ),
        None,
    )
    if anchor is None:
        raise NotNormalized("no all-identity column in the sandwich matrix")
    if a == b or a not in act.orbit(b):
        raise NotComparable(a, b)
    table = act.table
    u_b = frozenset(
        (i, g)
        for i in range(spec.rows)
        for g in range(spec.group.order)
        if any(
            table[b][rees_element_index(spec, i, g, j)] == a for j in range(spec.cols)
        )
    )
    j_prime = frozenset(
        j
        for j in range(spec.cols)
        if table[a][rees_element_index(spec, anchor, e, j)] == a
    )
    product = {
        rees_element_index(spec, i, g, j) for (i, g) in u_b for j in j_prime
    }
    direct = bracket_profile(act, a).brackets[b]
    if product != set(direct):
        raise InternalInvariantViolation(
            "bracket set does not factor as U_b x J' on this instance"
        )
    z_b: frozenset[int] | None = None
    if projection is None and act.table == monoid.table:
        projection = tuple(range(monoid.order))
    if projection is not None:
        rep_b = min(m for m in range(monoid.order) if projection[m] == b)
        rep_a = min(m for m in range(monoid.order) if projection[m] == a)
        if rep_b != monoid.identity and rep_a != monoid.identity:
            i_b = (rep_b - 1) // (spec.group.order * spec.cols)
            j_a = (rep_a - 1) % spec.cols
            z_b = frozenset(
                h
                for h in range(spec.group.order)
                if projection[rees_element_index(spec, i_b, h, j_a)] == a
            )
    return ReesBracketDecomposition(u_b, j_prime, z_b)


# ---------------------------------------------------------------------------
# act <-> monoid correspondence


@dataclass(frozen=True)
class CorrespondenceReport:
    two_sided: bool
    subacts_match_right_ideals: bool
    act_conditions: Mapping[str, bool] | None
    monoid_conditions: Mapping[str, bool] | None

    @property
    def equivalences_agree(self) -> bool:
        if self.act_conditions is None or self.monoid_conditions is None:
            return self.subacts_match_right_ideals
        return self.subacts_match_right_ideals and all(
            self.act_conditions[c] == self.monoid_conditions[c] for c in CONDITIONS
        )


def _monoid_separates(cong: Congruence, a: int, forbidden: frozenset[int]) -> bool:
    return _separates(cong, a, forbidden)


def _monoid_conditions(n_monoid: FiniteMonoid, cap: int) -> dict[str, bool]:
    """Brute-force monoid-side separability: a monoid homomorphism into a
    finite monoid is exactly a finite-index two-sided congruence."""
    reg = regular_act(n_monoid)
    two_sided = [
        c for c in enumerate_congruences(reg, cap=cap) if two_sided_violation(c) is None
    ]

    def separable(a: int, forbidden: frozenset[int]) -> bool:
        return any(_monoid_separates(c, a, forbidden) for c in two_sided)

    size = n_monoid.order
    rf = all(
        separable(a, frozenset({b})) for a in range(size) for b in range(a + 1, size)
    )
    principal = sorted(
        {frozenset(n_monoid.table[m]) for m in n_monoid.elements()}, key=sorted
    )
    wss = all(
        separable(a, ideal)
        for ideal in principal
        for a in range(size)
        if a not in ideal
    )
    ideals = [frozenset(i) for i in right_ideals(n_monoid)]
    sss = all(
        separable(a, ideal) for ideal in ideals for a in range(size) if a not in ideal
    )
    cs = all(
        separable(a, frozenset(range(size)) - {a}) for a in range(size) if size > 1
    )
    return {"RF": rf, "WSS": wss, "SSS": sss, "CS": cs}


def act_monoid_correspondence(
    monoid: FiniteMonoid,
    rho: Congruence,
    cap: int = DEFAULT_SEARCH_CAP,
    monoid_side: bool | None = None,
) -> CorrespondenceReport:
    """For N = M/rho: subacts of the act M/rho are the right ideals of N, and
    each act-side separability condition matches its monoid-side analogue,
    with both sides computed independently by brute force.  A right-only
    congruence checks the bijection alone, against the rho-saturated right
    ideals of M; requesting monoid_side on such input raises
    NotTwoSidedCongruence."""
    if rho.act.table != monoid.table:
        raise NotACongruence("rho must be a right congruence on the monoid")
    act, proj = quotient(rho.act, rho)
    act_subacts = {frozenset(s) for s in subacts(act)}
    violation = two_sided_violation(rho)
    if monoid_side and violation is not None:
        raise NotTwoSidedCongruence(*violation)
    if violation is not None:
        saturated = set()
        block_of = rho.partition.block_of
        for ideal in right_ideals(monoid):
            classes = frozenset(block_of[x] for x in ideal)
            members = {x for x in monoid.elements() if block_of[x] in classes}
            if members == set(ideal):
                saturated.add(classes)
        return CorrespondenceReport(
            two_sided=False,
            subacts_match_right_ideals=act_subacts == saturated,
            act_conditions=None,
            monoid_conditions=None,
        )
    n_monoid = quotient_monoid(monoid, rho)
    n_ideals = {frozenset(i) for i in right_ideals(n_monoid)}
    act_conditions = {
        c: check_condition(act, c, cap=cap).holds for c in CONDITIONS
    }
    monoid_conditions = _monoid_conditions(n_monoid, cap)
    return CorrespondenceReport(
        two_sided=True,
        subacts_match_right_ideals=act_subacts == n_ideals,
        act_conditions=act_conditions,
        monoid_conditions=monoid_conditions,
    )
