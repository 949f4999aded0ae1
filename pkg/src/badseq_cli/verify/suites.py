"""Property suites checked by ``badseq verify``.

Each suite turns a seeded random source into a list of instances. An
instance check returns None when its property holds and a message
describing the violation otherwise; a check that runs out of budget
raises BudgetExceededError and is reported as skipped.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING

from badseq_cli.derivatives import d_n_closed_form, d_n_principal, derive, mbound
from badseq_cli.hierarchies.bounds import length_bound
from badseq_cli.hierarchies.evaluate import HierarchyEvaluator
from badseq_cli.hierarchies.fundamental import (
    decrement,
    fundamental,
    lean_bracket,
    pointwise_le,
    predecessor,
    strict_pointwise_lt,
)
from badseq_cli.models import (
    BudgetMeter,
    EvalBudget,
    FundamentalConfig,
    HierarchyKind,
    OmegaPreset,
    Trichotomy,
    VerifySuite,
)
from badseq_cli.nwqo.algebra import normalize, reflect_residual
from badseq_cli.nwqo.control import SUCC, ControlFunction, parse_control
from badseq_cli.nwqo.expr import (
    Element,
    Gamma,
    Letter,
    Nat,
    NwqoExpr,
    Prod,
    Seg,
    Star,
    Sum,
    Word,
)
from badseq_cli.nwqo.oracle import max_bad_length, max_bad_length_residual
from badseq_cli.nwqo.order import enumerate_below, is_bad, is_controlled, leq
from badseq_cli.nwqo.syntax import format_element, format_nwqo, format_sequence
from badseq_cli.ordinals.sampling import (
    from_polynomial,
    lean_terms_below_omega_omega,
    random_cnf,
    random_fragment,
)
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    OrdinalTerm,
    classify,
    compare,
    format_ordinal,
    is_cnf,
    leanness,
    nat,
    natural_product,
    natural_sum,
    omega_power,
    syntactic_sum,
    to_cnf,
)
from badseq_cli.otype import canonical_nwqo, otype

if TYPE_CHECKING:
    import random


Check = Callable[[], str | None]


X_PLUS_1 = FundamentalConfig(omega_at=OmegaPreset.X_PLUS_1)
X_ONLY = FundamentalConfig(omega_at=OmegaPreset.X)
PRESETS = (X_PLUS_1, X_ONLY)


@dataclass(frozen=True, slots=True)
class Instance:
    """One checked instance of a property.

    Attributes:
        description: Human-readable statement of what is checked.
        check: Returns None if the property holds, else a violation message.
    """

    description: str
    check: Check


@dataclass(frozen=True, slots=True)
class SuiteContext:
    """Inputs shared by every suite builder.

    Attributes:
        rng: Seeded random source for this suite.
        budget: Ceilings for each instance.
        samples: Number of random terms for sampled laws.
    """

    rng: random.Random
    budget: EvalBudget
    samples: int


SuiteBuilder = Callable[[SuiteContext], list[Instance]]


def _expect(condition: bool, detail: str) -> str | None:
    return None if condition else detail


def _evaluate(
    kind: HierarchyKind,
    h: ControlFunction,
    alpha: OrdinalTerm,
    x: int,
    config: FundamentalConfig,
    budget: EvalBudget,
) -> int:
    return HierarchyEvaluator(h, config, budget)(kind, alpha, x)


def _descent_chain(
    alpha: OrdinalTerm, x: int, config: FundamentalConfig, budget: EvalBudget
) -> list[OrdinalTerm]:
    """Every term the x-descent visits from alpha down to 0, alpha first."""
    meter = BudgetMeter(budget)
    chain = [alpha]
    while not chain[-1].is_zero:
        meter.charge_step()
        current = chain[-1]
        if classify(current) == Trichotomy.SUCCESSOR:
            chain.append(decrement(current))
        else:
            chain.append(fundamental(current, x, config))
    return chain


def _pick_below(chain: list[OrdinalTerm], pick: float) -> OrdinalTerm:
    # Index 0 is the start of the chain; anything after it is strictly below.
    return chain[1 + int(pick * (len(chain) - 1))]


def _check_arithmetic(a: OrdinalTerm, b: OrdinalTerm, c: OrdinalTerm) -> str | None:
    if natural_sum(a, b) != natural_sum(b, a):
        return "natural sum is not commutative"
    if natural_product(a, b) != natural_product(b, a):
        return "natural product is not commutative"
    if natural_sum(natural_sum(a, b), c) != natural_sum(a, natural_sum(b, c)):
        return "natural sum is not associative"
    if natural_product(natural_product(a, b), c) != natural_product(a, natural_product(b, c)):
        return "natural product is not associative"
    if natural_product(a, natural_sum(b, c)) != natural_sum(
        natural_product(a, b), natural_product(a, c)
    ):
        return "natural product does not distribute over natural sum"
    if compare(a, b) == Ordering.LESS:
        if compare(natural_sum(a, c), natural_sum(b, c)) != Ordering.LESS:
            return "natural sum is not strictly monotone"
        if not c.is_zero and compare(natural_product(a, c), natural_product(b, c)) != Ordering.LESS:
            return "natural product is not strictly monotone"
    return None


def _check_order(a: OrdinalTerm, b: OrdinalTerm, c: OrdinalTerm) -> str | None:
    ab, ba = compare(a, b), compare(b, a)
    if int(ab) != -int(ba):
        return "compare is not antisymmetric"
    if (ab == Ordering.EQUAL) != (a == b):
        return "distinct CNF terms compare equal"
    if ab == Ordering.LESS and compare(b, c) == Ordering.LESS and compare(a, c) != Ordering.LESS:
        return "compare is not transitive"
    return None


def _check_principal(a: OrdinalTerm, beta: OrdinalTerm) -> str | None:
    if all(compare(e, beta) == Ordering.LESS for e, _ in a.summands):
        return _expect(
            compare(a, omega_power(beta)) == Ordering.LESS,
            "every exponent is below beta but the term is not below w^beta",
        )
    return None


def _check_notation(a: OrdinalTerm, b: OrdinalTerm) -> str | None:
    if parse_ordinal(format_ordinal(a)) != a:
        return "format and parse do not round-trip"
    joined = to_cnf(syntactic_sum(a, b))
    if not is_cnf(joined) or to_cnf(joined) != joined:
        return "to_cnf is not idempotent"
    if compare(joined, natural_sum(a, b)) == Ordering.GREATER:
        return "ordinal sum exceeds natural sum"
    return _expect(
        leanness(joined) <= leanness(a) + leanness(b),
        "normalizing a sum increased leanness beyond the sum of the parts",
    )


def ordinals_suite(ctx: SuiteContext) -> list[Instance]:
    """Hessenberg arithmetic laws, the CNF order, and notation round trips."""
    instances: list[Instance] = []
    for _ in range(ctx.samples):
        a, b, c = (random_cnf(ctx.rng, 3, 5, 2) for _ in range(3))
        text = f"a={format_ordinal(a)}, b={format_ordinal(b)}, c={format_ordinal(c)}"
        instances.append(Instance(f"arithmetic laws {text}", partial(_check_arithmetic, a, b, c)))
        instances.append(Instance(f"order laws {text}", partial(_check_order, a, b, c)))
        instances.append(Instance(f"principal bound {text}", partial(_check_principal, a, b)))
        instances.append(Instance(f"notation {text}", partial(_check_notation, a, b)))
    return instances


DESCENT_FAMILY: tuple[tuple[NwqoExpr, int], ...] = (
    *((Gamma(p), 4) for p in range(1, 5)),
    *((Seg(p), 4) for p in range(1, 5)),
    (Nat(), 4),
    (Sum(Gamma(2), Seg(3)), 4),
    (Sum(Nat(), Gamma(1)), 4),
    (Sum(Nat(), Nat()), 3),
    (Prod(Gamma(2), Gamma(2)), 4),
    (Prod(Gamma(2), Seg(3)), 4),
    (Prod(Seg(2), Nat()), 3),
    (Prod(Nat(), Nat()), 2),
    (Sum(Gamma(1), Prod(Gamma(2), Seg(2))), 3),
)


def _known_length(expr: NwqoExpr, n: int) -> int | None:
    match expr:
        case Gamma(p):
            return p if n >= 1 else 0
        case Seg(p):
            return min(n, p)
        case Nat():
            return n
    return None


def _check_descent(expr: NwqoExpr, n: int, budget: EvalBudget) -> str | None:
    result = max_bad_length(expr, SUCC, n, budget)
    if len(result.witness) != result.length:
        return f"witness has {len(result.witness)} elements for length {result.length}"
    if not is_bad(expr, result.witness) or not is_controlled(expr, SUCC, n, result.witness):
        return f"witness {format_sequence(result.witness)} is not a controlled bad sequence"
    known = _known_length(expr, n)
    if known is not None and result.length != known:
        return f"L = {result.length}, expected {known}"
    expected = max(
        (
            1 + max_bad_length_residual(expr, [x], SUCC, SUCC(n), budget)
            for x in enumerate_below(expr, n, budget)
        ),
        default=0,
    )
    if result.length != expected:
        return f"L = {result.length} but the descent equation gives {expected}"
    normalized = max_bad_length(normalize(expr), SUCC, n, budget).length
    return _expect(normalized == result.length, f"normal form has L = {normalized}")


def _check_embedding(u: Word, u_big: Word, v: Word, v_big: Word) -> str | None:
    star = Star(Gamma(2))
    if not leq(star, u, u):
        return "word embedding is not reflexive"
    if not (leq(star, u, u_big) and leq(star, v, v_big)):
        return "a word does not embed in a superword of itself"
    joined_big = Word(u_big.items + v_big.items)
    if not leq(star, Word(u.items + v.items), joined_big):
        return "embedding is not compatible with concatenation"
    return _expect(leq(star, u, joined_big), "embedding is not transitive")


def _random_word(rng: random.Random, length: int) -> Word:
    return Word(tuple(Letter(rng.randint(1, 2)) for _ in range(length)))


def _superword(rng: random.Random, word: Word, extra: int) -> Word:
    items = list(word.items)
    for _ in range(extra):
        items.insert(rng.randint(0, len(items)), Letter(rng.randint(1, 2)))
    return Word(tuple(items))


def descent_suite(ctx: SuiteContext) -> list[Instance]:
    """Exact lengths, the descent equation, witnesses, normal forms and embedding laws."""
    instances = [
        Instance(
            f"descent equation for {format_nwqo(expr)} at n={n}",
            partial(_check_descent, expr, n, ctx.budget),
        )
        for expr, max_n in DESCENT_FAMILY
        for n in range(max_n + 1)
    ]
    for _ in range(max(1, ctx.samples // 10)):
        u = _random_word(ctx.rng, ctx.rng.randint(0, 4))
        v = _random_word(ctx.rng, ctx.rng.randint(0, 4))
        u_big = _superword(ctx.rng, u, ctx.rng.randint(0, 3))
        v_big = _superword(ctx.rng, v, ctx.rng.randint(0, 3))
        instances.append(
            Instance(
                f"embedding laws for {format_element(u)}, {format_element(v)}",
                partial(_check_embedding, u, u_big, v, v_big),
            )
        )
    return instances


REFLECTION_FAMILY: tuple[NwqoExpr, ...] = (
    Gamma(3),
    Seg(3),
    Nat(),
    Sum(Gamma(2), Nat()),
    Prod(Gamma(2), Seg(2)),
    Prod(Nat(), Gamma(2)),
    Star(Gamma(1)),
    Star(Gamma(2)),
    Prod(Gamma(2), Star(Gamma(1))),
)


def _check_reflection(
    expr: NwqoExpr, element: Element, m: int, budget: EvalBudget
) -> str | None:
    reflected = reflect_residual(expr, element)
    residual = max_bad_length_residual(expr, [element], SUCC, m, budget)
    bound = max_bad_length(reflected, SUCC, m, budget).length
    return _expect(
        residual <= bound,
        f"residual length {residual} exceeds {bound} for reflection {format_nwqo(reflected)}",
    )


def reflection_suite(ctx: SuiteContext) -> list[Instance]:
    """Residual lengths never exceed the lengths of their reflections."""
    return [
        Instance(
            f"reflection of {format_nwqo(expr)} / {format_element(x)} at m={m}",
            partial(_check_reflection, expr, x, m, ctx.budget),
        )
        for expr in REFLECTION_FAMILY
        for x in enumerate_below(expr, 2)
        for m in range(1, 4)
    ]


EXPONENTIAL_FAMILY: tuple[NwqoExpr, ...] = (
    *(Gamma(p) for p in range(5)),
    Nat(),
    Star(Gamma(0)),
    Star(Gamma(1)),
    Star(Gamma(2)),
    Star(Gamma(3)),
    Star(Sum(Gamma(1), Gamma(1))),
    Prod(Star(Gamma(1)), Gamma(2)),
    Sum(Star(Gamma(2)), Gamma(3)),
    Prod(Star(Gamma(2)), Star(Gamma(2))),
    Sum(Prod(Gamma(2), Star(Gamma(3))), Nat()),
)


def _check_round_trip(alpha: OrdinalTerm) -> str | None:
    back = otype(canonical_nwqo(alpha))
    return _expect(back == alpha, f"o(C(alpha)) = {format_ordinal(back)}")


def _check_canonical(expr: NwqoExpr) -> str | None:
    alpha = otype(expr)
    if otype(normalize(expr)) != alpha:
        return "normalization changed the order type"
    canonical = canonical_nwqo(alpha)
    return _expect(
        canonical == normalize(expr),
        f"C(o(A)) = {format_nwqo(canonical)}, normal form is {format_nwqo(normalize(expr))}",
    )


def _check_homomorphism(left: NwqoExpr, right: NwqoExpr) -> str | None:
    a, b = otype(left), otype(right)
    if otype(Sum(left, right)) != natural_sum(a, b):
        return "order type of a sum is not the natural sum"
    return _expect(
        otype(Prod(left, right)) == natural_product(a, b),
        "order type of a product is not the natural product",
    )


def bijection_suite(ctx: SuiteContext) -> list[Instance]:
    """Order types and canonical nwqos are inverse bijections."""
    instances: list[Instance] = []
    for _ in range(ctx.samples):
        alpha = random_fragment(ctx.rng, 2, 4, 3)
        instances.append(
            Instance(f"o(C({format_ordinal(alpha)}))", partial(_check_round_trip, alpha))
        )
    instances.extend(
        Instance(f"C(o({format_nwqo(expr)}))", partial(_check_canonical, expr))
        for expr in EXPONENTIAL_FAMILY
    )
    for _ in range(max(1, ctx.samples // 10)):
        left, right = ctx.rng.choice(EXPONENTIAL_FAMILY), ctx.rng.choice(EXPONENTIAL_FAMILY)
        instances.append(
            Instance(
                f"o of sum and product of {format_nwqo(left)}, {format_nwqo(right)}",
                partial(_check_homomorphism, left, right),
            )
        )
    return instances


INEQUALITY_FAMILY: tuple[NwqoExpr, ...] = (
    *(Gamma(p) for p in range(1, 5)),
    Star(Gamma(1)),
    Star(Gamma(2)),
    Prod(Star(Gamma(1)), Gamma(2)),
    Sum(Star(Gamma(2)), Gamma(3)),
)


RESIDUAL_FAMILY: tuple[NwqoExpr, ...] = (
    Gamma(3),
    Nat(),
    Star(Gamma(1)),
    Star(Gamma(2)),
    Prod(Star(Gamma(1)), Gamma(2)),
)


def _check_derivative_laws(alpha: OrdinalTerm, n: int) -> str | None:
    k = leanness(alpha)
    for member in derive(alpha, n):
        if compare(member, alpha) != Ordering.LESS:
            return f"derivative {format_ordinal(member)} is not below alpha"
        if leanness(member) > k * n:
            return f"derivative {format_ordinal(member)} is not {k * n}-lean"
    return None


def _check_closed_form(beta: OrdinalTerm, n: int) -> str | None:
    principal, closed = d_n_principal(beta, n), d_n_closed_form(beta, n)
    return _expect(
        principal == closed,
        f"expansion gives {format_ordinal(principal)}, closed form {format_ordinal(closed)}",
    )


def _letter_symmetric(expr: NwqoExpr) -> bool:
    match expr:
        case Gamma() | Star(Gamma()):
            return True
    return False


def _check_main_inequality(expr: NwqoExpr, n: int, budget: EvalBudget) -> str | None:
    length = max_bad_length(expr, SUCC, n, budget, symmetry=_letter_symmetric(expr)).length
    bound = mbound(otype(expr), SUCC, n, budget)
    return _expect(length <= bound, f"L = {length} exceeds M = {bound}")


def _check_residual_cover(
    expr: NwqoExpr, x: Element, n: int, m: int, budget: EvalBudget
) -> str | None:
    residual = max_bad_length_residual(expr, [x], SUCC, m, budget)
    for member in derive(otype(expr), n):
        if residual <= max_bad_length(canonical_nwqo(member), SUCC, m, budget).length:
            return None
    return f"no derivative bounds the residual length {residual}"


def _check_descent_bound_values(n: int, budget: EvalBudget) -> str | None:
    finite = mbound(nat(n + 2), SUCC, n, budget)
    limit = mbound(OMEGA, SUCC, n, budget)
    return _expect(
        finite == n + 2 and limit == n,
        f"M_(n+2)(n) = {finite} and M_w(n) = {limit}",
    )


def derivatives_suite(ctx: SuiteContext) -> list[Instance]:
    """Derivative laws, the main inequality and residual covering."""
    instances: list[Instance] = []
    for _ in range(ctx.samples):
        alpha = random_fragment(ctx.rng, 2, 3, 3)
        n = ctx.rng.randint(1, 4)
        instances.append(
            Instance(
                f"derivatives of {format_ordinal(alpha)} at n={n}",
                partial(_check_derivative_laws, alpha, n),
            )
        )
    for _ in range(max(1, ctx.samples // 2)):
        beta = from_polynomial([ctx.rng.randint(0, 4) for _ in range(ctx.rng.randint(1, 4))])
        n = ctx.rng.randint(1, 5)
        instances.append(
            Instance(
                f"closed form of D_{n}(w^({format_ordinal(beta)}))",
                partial(_check_closed_form, beta, n),
            )
        )
    instances.extend(
        Instance(
            f"L <= M for {format_nwqo(expr)} at n={n}",
            partial(_check_main_inequality, expr, n, ctx.budget),
        )
        for expr in INEQUALITY_FAMILY
        for n in range(4)
    )
    instances.extend(
        Instance(
            f"derivative covers {format_nwqo(expr)} / {format_element(x)} at n={n}, m={m}",
            partial(_check_residual_cover, expr, x, n, m, ctx.budget),
        )
        for expr in RESIDUAL_FAMILY
        for n in (1, 2)
        for x in enumerate_below(expr, n)
        for m in (1, 2)
    )
    instances.extend(
        Instance(f"M values at n={n}", partial(_check_descent_bound_values, n, ctx.budget))
        for n in range(1, 5)
    )
    return instances


SMALL_CNF: tuple[OrdinalTerm, ...] = (
    *lean_terms_below_omega_omega(1, 2),
    omega_power(nat(2)),
)
NON_CNF: tuple[OrdinalTerm, ...] = (
    syntactic_sum(ONE, OMEGA),
    syntactic_sum(nat(2), omega_power(nat(2))),
    syntactic_sum(OMEGA, omega_power(nat(2))),
)
TINY_CNF: tuple[OrdinalTerm, ...] = (ONE, nat(2), OMEGA, syntactic_sum(OMEGA, ONE))


def _check_length_recursion(
    alpha: OrdinalTerm, x: int, config: FundamentalConfig, budget: EvalBudget
) -> str | None:
    pred = predecessor(alpha, x, config)
    lhs = _evaluate(HierarchyKind.LENGTH, SUCC, alpha, x, config, budget)
    rhs = 1 + _evaluate(HierarchyKind.LENGTH, SUCC, pred, SUCC(x), config, budget)
    return _expect(lhs == rhs, f"h_a(x) = {lhs} but 1 + h_P(a)(h(x)) = {rhs}")


def _check_length_vs_hardy(
    h: ControlFunction, alpha: OrdinalTerm, x: int, budget: EvalBudget
) -> str | None:
    length = _evaluate(HierarchyKind.LENGTH, h, alpha, x, X_PLUS_1, budget)
    hardy = _evaluate(HierarchyKind.HARDY, h, alpha, x, X_PLUS_1, budget)
    if h.is_successor:
        return _expect(length == hardy - x, f"H_a(x) = {length} but H^a(x) - x = {hardy - x}")
    return _expect(length <= hardy - x, f"h_a(x) = {length} exceeds h^a(x) - x = {hardy - x}")


def _check_power_iteration(
    a: int, r: int, x: int, config: FundamentalConfig, budget: EvalBudget
) -> str | None:
    hardy = _evaluate(HierarchyKind.HARDY, SUCC, omega_power(nat(a), r), x, config, budget)
    value = x
    for _ in range(r):
        value = _evaluate(HierarchyKind.FAST, SUCC, nat(a), value, config, budget)
    return _expect(hardy == value, f"h^(w^a*r)(x) = {hardy} but f_a^r(x) = {value}")


def _check_composition(
    gamma: OrdinalTerm, alpha: OrdinalTerm, x: int, budget: EvalBudget
) -> str | None:
    joined = _evaluate(HierarchyKind.HARDY, SUCC, syntactic_sum(gamma, alpha), x, X_PLUS_1, budget)
    inner = _evaluate(HierarchyKind.HARDY, SUCC, alpha, x, X_PLUS_1, budget)
    outer = _evaluate(HierarchyKind.HARDY, SUCC, gamma, inner, X_PLUS_1, budget)
    return _expect(joined == outer, f"h^(g+a)(x) = {joined} but h^g(h^a(x)) = {outer}")


def _check_monotone_argument(alpha: OrdinalTerm, x: int, y: int, budget: EvalBudget) -> str | None:
    low = _evaluate(HierarchyKind.LENGTH, SUCC, alpha, x, X_PLUS_1, budget)
    high = _evaluate(HierarchyKind.LENGTH, SUCC, alpha, y, X_PLUS_1, budget)
    return _expect(low <= high, f"h_a({x}) = {low} > h_a({y}) = {high}")


def _check_descent_monotone(
    alpha: OrdinalTerm, pick: float, x: int, budget: EvalBudget
) -> str | None:
    smaller = _pick_below(_descent_chain(alpha, x, X_PLUS_1, budget), pick)
    if not pointwise_le(smaller, alpha, x, X_PLUS_1, budget):
        return f"{format_ordinal(smaller)} is on the descent but not pointwise below"
    low = _evaluate(HierarchyKind.LENGTH, SUCC, smaller, x, X_PLUS_1, budget)
    high = _evaluate(HierarchyKind.LENGTH, SUCC, alpha, x, X_PLUS_1, budget)
    return _expect(low <= high, f"h at {format_ordinal(smaller)} is {low} > {high}")


def _check_pointwise_laws(
    gamma: OrdinalTerm, alpha: OrdinalTerm, pick: float, x: int, budget: EvalBudget
) -> str | None:
    if not pointwise_le(ZERO, alpha, x, X_PLUS_1, budget):
        return "0 is not pointwise below alpha"
    smaller = _pick_below(_descent_chain(alpha, x, X_PLUS_1, budget), pick)
    if not strict_pointwise_lt(
        syntactic_sum(gamma, smaller), syntactic_sum(gamma, alpha), x, X_PLUS_1, budget
    ):
        return f"left addition of {format_ordinal(gamma)} breaks the pointwise order"
    return _expect(
        strict_pointwise_lt(omega_power(smaller), omega_power(alpha), x, X_PLUS_1, budget),
        "exponentiation breaks the pointwise order",
    )


def _check_fundamental_growth(limit: OrdinalTerm, x: int, y: int, budget: EvalBudget) -> str | None:
    return _expect(
        strict_pointwise_lt(
            fundamental(limit, x, X_PLUS_1), fundamental(limit, y, X_PLUS_1), y, X_PLUS_1, budget
        ),
        f"lambda_{x} is not pointwise below lambda_{y} at {y}",
    )


def _check_fast_laws(alpha: OrdinalTerm, pick: float, x: int, budget: EvalBudget) -> str | None:
    value = _evaluate(HierarchyKind.FAST, SUCC, alpha, x, X_PLUS_1, budget)
    if value < SUCC(x):
        return f"f_a({x}) = {value} is below h({x})"
    following = _evaluate(HierarchyKind.FAST, SUCC, alpha, x + 1, X_PLUS_1, budget)
    if value > following:
        return f"f_a is not monotone: f_a({x}) = {value} > f_a({x + 1}) = {following}"
    if alpha.is_zero:
        return None
    smaller = _pick_below(_descent_chain(alpha, x, X_PLUS_1, budget), pick)
    lower = _evaluate(HierarchyKind.FAST, SUCC, smaller, x, X_PLUS_1, budget)
    return _expect(lower <= value, f"f at {format_ordinal(smaller)} is {lower} > {value}")


def _check_anchor(
    kind: HierarchyKind,
    alpha: OrdinalTerm,
    x: int,
    config: FundamentalConfig,
    expected: int,
    budget: EvalBudget,
) -> str | None:
    value = _evaluate(kind, SUCC, alpha, x, config, budget)
    return _expect(value == expected, f"value is {value}, expected {expected}")


def hierarchies_suite(ctx: SuiteContext) -> list[Instance]:
    """Recursion identities, monotonicity and pointwise-order laws of the hierarchies."""
    budget = ctx.budget
    instances = [
        Instance(
            "F_2(2) = 8 with w_x = x",
            partial(_check_anchor, HierarchyKind.FAST, nat(2), 2, X_ONLY, 8, budget),
        ),
        Instance(
            "F_3(2) = 2048 with w_x = x",
            partial(_check_anchor, HierarchyKind.FAST, nat(3), 2, X_ONLY, 2048, budget),
        ),
    ]
    instances.extend(
        Instance(
            f"H^w({x}) = {2 * x + 1}",
            partial(_check_anchor, HierarchyKind.HARDY, OMEGA, x, X_PLUS_1, 2 * x + 1, budget),
        )
        for x in range(5)
    )
    for config in PRESETS:
        instances.extend(
            Instance(
                f"length recursion at {format_ordinal(alpha)}, x={x}, w_x={config.omega_at}",
                partial(_check_length_recursion, alpha, x, config, budget),
            )
            for alpha in (*SMALL_CNF, *NON_CNF)
            if not alpha.is_zero
            for x in range(1, 5)
        )
        instances.extend(
            Instance(
                f"h^(w^{a}*{r})({x}) = f_{a}^{r}({x}), w_x={config.omega_at}",
                partial(_check_power_iteration, a, r, x, config, budget),
            )
            for a in range(3)
            for r in range(1, 4)
            for x in range(4)
        )
    double = parse_control("2*x+1")
    for h in (SUCC, double):
        instances.extend(
            Instance(
                f"length below hardy at {format_ordinal(alpha)}, x={x}, h={h}",
                partial(_check_length_vs_hardy, h, alpha, x, budget),
            )
            for alpha in (*SMALL_CNF, *NON_CNF)
            for x in range(4)
        )
    pool = (*SMALL_CNF, *NON_CNF)
    for _ in range(40):
        gamma, alpha = ctx.rng.choice(pool), ctx.rng.choice(pool)
        x = ctx.rng.randint(0, 3)
        instances.append(
            Instance(
                f"composition at {format_ordinal(gamma)} + {format_ordinal(alpha)}, x={x}",
                partial(_check_composition, gamma, alpha, x, budget),
            )
        )
    instances.extend(
        Instance(
            f"monotone in x at {format_ordinal(alpha)}, {x} < {y}",
            partial(_check_monotone_argument, alpha, x, y, budget),
        )
        for alpha in SMALL_CNF
        for x, y in itertools.combinations(range(5), 2)
    )
    for alpha in SMALL_CNF:
        if alpha.is_zero:
            continue
        for x in range(1, 4):
            instances.append(
                Instance(
                    f"pointwise descent monotone at {format_ordinal(alpha)}, x={x}",
                    partial(_check_descent_monotone, alpha, ctx.rng.random(), x, budget),
                )
            )
            instances.append(
                Instance(
                    f"fast-growing laws at {format_ordinal(alpha)}, x={x}",
                    partial(_check_fast_laws, alpha, ctx.rng.random(), x, budget),
                )
            )
    for alpha in TINY_CNF:
        for x in (1, 2):
            gamma = ctx.rng.choice(pool)
            instances.append(
                Instance(
                    f"pointwise laws at {format_ordinal(alpha)}, "
                    f"prefix {format_ordinal(gamma)}, x={x}",
                    partial(_check_pointwise_laws, gamma, alpha, ctx.rng.random(), x, budget),
                )
            )
    instances.extend(
        Instance(
            f"fundamental sequence of {format_ordinal(limit)} grows, {x} < {y}",
            partial(_check_fundamental_growth, limit, x, y, budget),
        )
        for limit in SMALL_CNF
        if classify(limit) == Trichotomy.LIMIT
        for x, y in itertools.combinations(range(4), 2)
    )
    return instances


def _check_lean_predecessor(gamma: OrdinalTerm, x: int, budget: EvalBudget) -> str | None:
    pred = predecessor(gamma, x, X_PLUS_1)
    for alpha in lean_terms_below_omega_omega(x, x):
        below = compare(alpha, gamma) == Ordering.LESS
        under = compare(alpha, pred) != Ordering.GREATER
        reached = pointwise_le(alpha, pred, x, X_PLUS_1, budget)
        if not below == under == reached:
            return (
                f"alpha={format_ordinal(alpha)}: alpha < gamma is {below}, "
                f"alpha <= P is {under}, pointwise is {reached}"
            )
    return None


def _check_bracket(alpha: OrdinalTerm, x: int) -> str | None:
    bracket = lean_bracket(alpha, x)
    pred = predecessor(alpha, leanness(alpha) * x, X_PLUS_1)
    return _expect(
        bracket == pred,
        f"[alpha]_x = {format_ordinal(bracket)} but P = {format_ordinal(pred)}",
    )


def lean_suite(ctx: SuiteContext) -> list[Instance]:
    """Lean terms and predecessors, checked exhaustively below ω^ω."""
    targets = [t for t in lean_terms_below_omega_omega(2, 2) if not t.is_zero]
    instances = [
        Instance(
            f"lean predecessor law at gamma={format_ordinal(gamma)}, x={x}",
            partial(_check_lean_predecessor, gamma, x, ctx.budget),
        )
        for x in range(1, 4)
        for gamma in targets
    ]
    instances.extend(
        Instance(
            f"[{format_ordinal(alpha)}]_{x} is a predecessor",
            partial(_check_bracket, alpha, x),
        )
        for x in range(1, 4)
        for alpha in lean_terms_below_omega_omega(2, 3)
        if not alpha.is_zero and leanness(alpha) * x <= 6
    )
    return instances


def _check_bridge(
    alpha: OrdinalTerm, n: int, config: FundamentalConfig, budget: EvalBudget
) -> str | None:
    bound = length_bound(alpha, SUCC, n, config, budget, numeric=False)
    ceiling = _evaluate(
        HierarchyKind.LENGTH, SUCC.times_identity(), alpha, bound.argument, config, budget
    )
    descent = mbound(alpha, SUCC, n, budget)
    if descent > ceiling:
        return f"M = {descent} exceeds h_a({bound.argument}) = {ceiling}"
    if alpha.is_zero or compare(alpha.summands[0][0], nat(2)) == Ordering.LESS:
        length = max_bad_length(canonical_nwqo(alpha), SUCC, n, budget).length
        return _expect(length <= descent, f"L = {length} exceeds M = {descent}")
    return None


def bridge_suite(ctx: SuiteContext) -> list[Instance]:
    """Oracle length below M below the length hierarchy, for both ω_x presets."""
    return [
        Instance(
            f"L <= M <= h at {format_ordinal(alpha)}, n={n}, w_x={config.omega_at}",
            partial(_check_bridge, alpha, n, config, ctx.budget),
        )
        for config in PRESETS
        for alpha in lean_terms_below_omega_omega(2, 2)
        for n in range(1, 4)
    ]


SUITES: dict[VerifySuite, SuiteBuilder] = {
    VerifySuite.ORDINALS: ordinals_suite,
    VerifySuite.DESCENT: descent_suite,
    VerifySuite.REFLECTION: reflection_suite,
    VerifySuite.BIJECTION: bijection_suite,
    VerifySuite.DERIVATIVES: derivatives_suite,
    VerifySuite.HIERARCHIES: hierarchies_suite,
    VerifySuite.LEAN: lean_suite,
    VerifySuite.BRIDGE: bridge_suite,
}
