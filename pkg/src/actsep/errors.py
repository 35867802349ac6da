"""Exception types raised across the package.

Every validation failure carries the witness that triggered it, so callers
(and test suites) can re-check the offending triple/pair directly.
"""


class ActsepError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(ActsepError):
    pass


class InvalidSpec(ActsepError):
    pass


class NotAssociative(ActsepError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"associativity fails at triple ({i}, {j}, {k})")
        self.triple = (i, j, k)


class BadIdentity(ActsepError):
    def __init__(self, i: int):
        super().__init__(f"identity law fails at element {i}")
        self.element = i


class ClosureTooLarge(ActsepError):
    def __init__(self, limit: int):
        super().__init__(f"transformation closure exceeds {limit} elements")
        self.limit = limit


class RightIdealEnumerationTooLarge(ActsepError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"right ideal enumeration needs ~{estimate} unions, cap is {cap}")
        self.estimate = estimate
        self.cap = cap


class NotNormalSubgroup(ActsepError):
    pass


class LinkNotHomomorphism(ActsepError):
    def __init__(self, alpha: int, beta: int):
        super().__init__(f"link ({alpha} -> {beta}) is not a group homomorphism")
        self.pair = (alpha, beta)


class LinkCoherenceViolation(ActsepError):
    def __init__(self, alpha: int, beta: int, gamma: int):
        super().__init__(f"links violate coherence on chain {alpha} >= {beta} >= {gamma}")
        self.chain = (alpha, beta, gamma)


class IdentityLawViolation(ActsepError):
    def __init__(self, a: int):
        super().__init__(f"act identity law fails at carrier element {a}")
        self.element = a


class AssociativityViolation(ActsepError):
    def __init__(self, a: int, m: int, n: int):
        super().__init__(f"act associativity fails at (a={a}, m={m}, n={n})")
        self.triple = (a, m, n)


class EmptyGeneratorSet(ActsepError):
    pass


class NotASubact(ActsepError):
    def __init__(self, b: int, m: int, image: int):
        super().__init__(f"not a subact: element {b} acted by {m} leaves the set (-> {image})")
        self.witness = (b, m, image)


class MonoidMismatch(ActsepError):
    pass


class ActMismatch(ActsepError):
    pass


class ComplementNotIdeal(ActsepError):
    def __init__(self, x: int, m: int, image: int):
        super().__init__(f"complement is not an ideal: {x} * {m} = {image} lies in the submonoid")
        self.witness = (x, m, image)


class NotARetraction(ActsepError):
    pass


class NotCompatible(ActsepError):
    def __init__(self, a: int, b: int, m: int):
        super().__init__(f"partition not compatible: ({a}, {b}) related but ({a}*{m}, {b}*{m}) split")
        self.witness = (a, b, m)


class NotACongruence(ActsepError):
    pass


class SearchSpaceTooLarge(ActsepError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"search space ~{estimate} exceeds cap {cap}")
        self.estimate = estimate
        self.cap = cap


class NotAZero(ActsepError):
    def __init__(self, a: int):
        super().__init__(f"element {a} is not a zero of the act")
        self.element = a


class NotClifford(ActsepError):
    pass


class RRelated(ActsepError):
    def __init__(self, a: int, b: int):
        super().__init__(f"elements {a} and {b} are R-related")
        self.pair = (a, b)


class XMeetsBlock(ActsepError):
    def __init__(self, witness: int):
        super().__init__(f"forbidden set meets the block of the element (witness {witness})")
        self.witness = witness


class NotNormalized(ActsepError):
    pass


class NotComparable(ActsepError):
    def __init__(self, a: int, b: int):
        super().__init__(f"precondition a <= b fails for (a={a}, b={b})")
        self.pair = (a, b)


class NotTwoSidedCongruence(ActsepError):
    def __init__(self, a: int, b: int, m: int):
        super().__init__(f"right congruence is not two-sided: ({a},{b}) related, left action by {m} splits")
        self.witness = (a, b, m)


class PreconditionViolated(ActsepError):
    pass


class EmptyForbiddenSet(ActsepError):
    pass


class UnknownFamily(ActsepError):
    def __init__(self, name: str):
        super().__init__(f"unknown family {name!r}")
        self.name = name


class ParamOutOfRange(ActsepError):
    def __init__(self, family: str, param: str, value, allowed: str):
        super().__init__(f"family {family}: parameter {param}={value} outside {allowed}")
        self.family = family
        self.param = param
        self.value = value


class InternalInvariantViolation(ActsepError):
    """A property the underlying theory guarantees failed to verify; a bug."""
