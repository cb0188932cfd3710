import dataclasses
import random
from fractions import Fraction

import pytest

from tangleslopes import (
    ConstantPath,
    MismatchedWeights,
    Product,
    SeifertUndefined,
    Sum,
    VertexPath,
    WeightState,
    boundary_slope,
    build_system,
    kn,
    parse,
    replay,
    seifert_leaf_path,
    seifert_system,
    seifert_tau,
    tau,
    tau_product,
    tau_sum,
    validate,
    verify_system,
)


def E(pq):
    """Reference twist contribution of one tangle."""
    return tau(seifert_leaf_path(Fraction(pq)))


# frozen oracle values, worked out by hand from the even continued
# fraction expansion before the solver was written
FROZEN_E = {
    Fraction(-1, 2): -2,
    Fraction(1, 2): 2,
    Fraction(1, 3): -4,
    Fraction(1, 5): -8,
    Fraction(1, 7): -12,
    Fraction(1, 4): 2,
    Fraction(-1, 3): 4,
    Fraction(2, 3): 4,
}


def test_reference_contributions_match_frozen_oracles():
    for pq, expected in FROZEN_E.items():
        assert E(pq) == expected, pq


def test_reference_tau_of_pretzels():
    assert seifert_tau(parse("-1/2 + 1/3 + 1/7")) == -18
    assert seifert_tau(parse("-1/2 + 1/3 + 1/5")) == -14
    assert seifert_tau(parse("-1/2 + 1/3 + 1/3")) == -10
    assert seifert_tau(parse("-1/2 + 1/3 + 1/4")) == -4


def test_reference_tau_cancels_on_the_family():
    for n in range(2, 7):
        assert seifert_tau(kn(n)) == 0


def test_reference_tau_cancels_on_squared_tangles():
    rng = random.Random(7)
    for _ in range(50):
        leaves = []
        for _ in range(rng.randint(2, 4)):
            q = rng.randint(2, 9)
            p = rng.choice([x for x in range(-q, q + 1) if x and Fraction(x, q).denominator == q])
            leaves.append(parse("%d/%d" % (p, q)))
        if not any(l.fraction.denominator % 2 == 0 for l in leaves):
            leaves[0] = parse("1/2")
        t = leaves[0]
        for leaf in leaves[1:]:
            t = Sum(t, leaf)
        assert seifert_tau(Product(t, t)) == 0


def test_reference_undefined_without_even_denominator():
    with pytest.raises(SeifertUndefined):
        seifert_tau(parse("1/3 + 1/3 + 1/3"))
    with pytest.raises(SeifertUndefined):
        seifert_tau(parse("(1/3 + 1/5) o 1/7"))


def test_reference_is_odd_and_even_translation_invariant():
    rng = random.Random(11)
    for _ in range(60):
        q = rng.randint(1, 12)
        p = rng.randint(-25, 25)
        if p == 0:
            continue
        x = Fraction(p, q)
        assert E(-x) == -E(x), x
        if x.denominator > 1:
            # integer tangles step to sign-dependent anchors, so only
            # fractional ones are stable under even translation
            assert E(x + 2 * rng.randint(-2, 2)) == E(x), x


def test_reference_handles_integer_tangles():
    assert E(2) == 0 and E(-2) == 0
    assert E(3) == 2 and E(-3) == -2
    assert seifert_leaf_path(Fraction(4)).vertices == (Fraction(4),)


def test_reference_paths_validate():
    rng = random.Random(13)
    for _ in range(40):
        q = rng.randint(2, 12)
        p = rng.randint(-25, 25)
        if p == 0 or Fraction(p, q).denominator == 1:
            continue
        path = seifert_leaf_path(Fraction(p, q))
        assert validate(path) == [], Fraction(p, q)
        assert path.final_fraction == 1


def test_tau_sum_and_product_rules():
    assert tau_sum(Fraction(4), Fraction(-6)) == -2
    assert tau_product(Fraction(0), Fraction(2), Fraction(-16)) == -14
    assert tau_product(Fraction(3), Fraction(-2), Fraction(1)) == -4


def test_replay_reproduces_the_family_trace():
    expr = kn(2)
    paths = (
        ConstantPath(Fraction(-1, 2), WeightState(1, 5, -3)),
        ConstantPath(Fraction(1, 3), WeightState(1, 5, 2)),
        VertexPath(Fraction(-1, 2), (Fraction(-1, 2), Fraction(0))),
        VertexPath(
            Fraction(1, 3),
            (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(4), Fraction(5), Fraction(6)),
        ),
    )
    nodes, state, total = replay(expr, paths)
    assert state == WeightState(1, 0, 0)
    assert total == -14
    assert nodes[1].state == WeightState(1, 5, -1)
    assert nodes[0].transformed == WeightState(1, 0, -6)
    assert nodes[0].tau_prime == 2
    assert nodes[4].tau == -16
    assert [n.kind for n in nodes] == ["product", "sum", "leaf", "leaf", "sum", "leaf", "leaf"]


def test_replay_rescales_to_common_ab():
    expr = parse("-1/2 + 1/3")
    paths = (
        ConstantPath(Fraction(-1, 2), WeightState(1, 5, -3)),
        ConstantPath(Fraction(1, 3), WeightState(2, 10, 4)),
    )
    nodes, state, total = replay(expr, paths)
    assert state == WeightState(1, 5, -1)
    assert nodes[0].scales == (2, 1)
    assert total == 0


def test_replay_rejects_mismatched_directions():
    expr = parse("-1/2 + 1/3")
    paths = (
        ConstantPath(Fraction(-1, 2), WeightState(1, 1, -1)),
        ConstantPath(Fraction(1, 3), WeightState(1, 5, 3)),
    )
    with pytest.raises(MismatchedWeights):
        replay(expr, paths)


def test_replay_checks_path_count():
    with pytest.raises(ValueError):
        replay(kn(2), (ConstantPath(Fraction(-1, 2), WeightState(1, 1, -1)),))


def test_build_system_and_boundary_slope():
    expr = parse("-1/2 + 1/3 + 1/7")
    paths = tuple(
        VertexPath(leaf.fraction, vs)
        for leaf, vs in zip(
            expr.leaves(),
            (
                (Fraction(-1, 2), Fraction(0)),
                (Fraction(1, 3), Fraction(0)),
                (Fraction(1, 7), Fraction(0)),
            ),
        )
    )
    system = build_system(expr, paths, reference_tau=seifert_tau(expr))
    assert system.closure == WeightState(1, 0, 0)
    assert system.tau == 2
    assert system.slope == 20
    assert boundary_slope(system) == 20
    assert verify_system(system) == []


def test_seifert_system_shape():
    system = seifert_system(kn(3))
    assert system.note == "seifert-reference"
    assert system.closure is None and system.slope == 0
    assert len(system.assignment) == 4
    assert verify_system(system) == []


def test_verify_system_catches_tampering():
    system = seifert_system(kn(2))
    wrong = dataclasses.replace(system, tau=system.tau + 2)
    assert verify_system(wrong)

    expr = parse("-1/2 + 1/3 + 1/7")
    paths = tuple(
        VertexPath(leaf.fraction, (leaf.fraction, Fraction(0)))
        for leaf in expr.leaves()
    )
    good = build_system(expr, paths, reference_tau=seifert_tau(expr))
    assert verify_system(good) == []
    assert verify_system(dataclasses.replace(good, slope=good.slope + 1))
    assert verify_system(dataclasses.replace(good, tau=good.tau - 2))


def test_verify_system_flags_open_root():
    expr = parse("-1/2 + 1/3")
    paths = (
        ConstantPath(Fraction(-1, 2), WeightState(1, 5, -3)),
        ConstantPath(Fraction(1, 3), WeightState(1, 5, 2)),
    )
    system = build_system(expr, paths, reference_tau=Fraction(0))
    assert any("not closed" in p for p in verify_system(system))
