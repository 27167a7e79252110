"""Tests for membership measures, space axioms and derived fuzzy sets."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.conftest import DUAL_TRIPLES
from tests.strategies import exprs
from vague_membership.connectives import ConnectiveTriple, TConormKind, parse_triple
from vague_membership.errors import (
    BindingError,
    ConstructionError,
    CrossPartitionError,
    DomainError,
)
from vague_membership.expr import And, Atom, Neg, Or, parse
from vague_membership.measure import (
    Judgement,
    check_axioms,
    consistent_degree,
    derive_fuzzy_set,
    eval_measure,
    fs_combine,
    fs_membership,
    incompatible,
    intuitionistic_pair,
    judge,
    separation,
    sharpness,
)
from vague_membership.oracle import oracle_eval
from vague_membership.partition import random_partition
from vague_membership.plfunc import Interval
from vague_membership.specio import load_bundled

HEIGHT_NAMES = ("short", "medium", "tall")
LUKASIEWICZ = "standard,lukasiewicz,boundedsum"
PRODUCT = "standard,product,probsum"

dyadic = st.integers(0, 64).map(lambda k: k / 64)


class TestJudgement:
    """Tests for Judgement and judge."""

    def test_judge_height(self, height):
        j = judge(height, 1.5)
        assert j.names == list(HEIGHT_NAMES)
        assert j.values() == pytest.approx([0.625, 0.375, 0.0])
        assert j.x == 1.5

    def test_rejects_out_of_range_degree(self):
        with pytest.raises(DomainError):
            Judgement.from_degrees({"young": 1.2})

    def test_judge_outside_domain(self, height):
        with pytest.raises(DomainError):
            judge(height, 4.0)


class TestEvalMeasure:
    """Tests for eval_measure."""

    def test_minmax(self, young_old, minmax):
        assert eval_measure(young_old, minmax, "young & old") == 0.4
        assert eval_measure(young_old, minmax, "young | old") == 0.6
        assert eval_measure(young_old, minmax, "!young") == pytest.approx(0.4)

    def test_lukasiewicz(self, young_old):
        triple = parse_triple(LUKASIEWICZ)
        assert eval_measure(young_old, triple, "young & old") == 0.0
        assert eval_measure(young_old, triple, "young | old") == 1.0

    def test_constants(self, young_old, dual_triple):
        assert eval_measure(young_old, dual_triple, "bot") == 0.0
        assert eval_measure(young_old, dual_triple, "top") == 1.0
        assert eval_measure(young_old, dual_triple, "young | top") == 1.0
        assert eval_measure(young_old, dual_triple, "young & bot") == 0.0

    def test_double_negation_is_identity(self, dual_triple):
        j = Judgement.from_degrees({"a": 0.1})
        assert eval_measure(j, dual_triple, "!!a") == 0.1
        assert eval_measure(j, dual_triple, "not !a") == 0.1

    def test_accepts_parsed_expression(self, young_old, minmax):
        assert eval_measure(young_old, minmax, Or(Atom("young"), Atom("old"))) == 0.6

    def test_unbound_name(self, young_old, minmax):
        with pytest.raises(BindingError) as exc_info:
            eval_measure(young_old, minmax, "young & middle")
        assert exc_info.value.names == ["middle"]
        assert "young" in str(exc_info.value)

    def test_de_morgan(self, young_old, dual_triple):
        left = eval_measure(young_old, dual_triple, "!(young & old)")
        right = eval_measure(young_old, dual_triple, "!young | !old")
        assert left == pytest.approx(right, abs=1e-12)

    @settings(max_examples=150)
    @given(
        e=exprs(set(HEIGHT_NAMES)),
        degrees=st.fixed_dictionaries({n: dyadic for n in HEIGHT_NAMES}),
        triple_name=st.sampled_from(DUAL_TRIPLES),
    )
    def test_agrees_with_oracle(self, e, degrees, triple_name):
        triple = parse_triple(triple_name)
        j = Judgement.from_degrees(degrees)
        assert eval_measure(j, triple, e) == pytest.approx(
            oracle_eval(j, triple, e), abs=1e-12
        )


class TestCheckAxioms:
    """Tests for check_axioms."""

    def test_regular_not_normal(self, young_old, minmax):
        report = check_axioms(young_old, minmax)
        assert report.axiom1 and report.axiom5
        assert report.regular
        assert not report.normal
        assert [r.total for r in report.residuals] == [1.0, 1.0]

    def test_crisp(self, crisp_at_25, dual_triple):
        report = check_axioms(crisp_at_25, dual_triple)
        assert report.normal
        assert report.crisp
        assert report.regular

    def test_overshoot_fails_axiom_five(self, minmax):
        report = check_axioms(Judgement.from_degrees({"a": 0.7, "b": 0.6}), minmax)
        assert report.axiom1
        assert not report.axiom5
        assert report.witness == "a"
        assert not report.normal

    def test_all_zero(self, minmax):
        report = check_axioms(Judgement.from_degrees({"a": 0.0, "b": 0.0}), minmax)
        assert not report.axiom1
        assert not report.axiom5

    def test_probabilistic_sum_of_three(self):
        triple = parse_triple(PRODUCT)
        j = Judgement.from_degrees({"a": 0.5, "b": 0.5, "c": 0.0})
        report = check_axioms(j, triple)
        assert report.residuals[2].total == pytest.approx(0.75)
        assert not report.regular
        assert report.axiom5

    def test_to_dict(self, young_old, minmax):
        data = check_axioms(young_old, minmax).to_dict()
        assert data["tconorm"] == "max"
        assert data["residuals"] == {"young": 1.0, "old": 1.0}

    def test_tconorm_recorded(self, young_old):
        report = check_axioms(young_old, parse_triple(LUKASIEWICZ))
        assert report.tconorm is TConormKind.BOUNDED_SUM


class TestDeriveFuzzySet:
    """Tests for derive_fuzzy_set and fs_membership."""

    def test_exact_for_minmax(self, height, minmax):
        fs = derive_fuzzy_set(height, minmax, "medium | tall")
        assert fs.exact
        assert fs.derived_fn(2.5) == 1.0
        assert fs.derived_fn(1.5) == pytest.approx(0.375)
        assert str(fs) == "medium | tall"

    def test_negated_block(self, height, minmax):
        fs = derive_fuzzy_set(height, minmax, "!short")
        assert fs.derived_fn(1.5) == pytest.approx(0.375)
        assert fs(1.5) == pytest.approx(0.375)

    def test_sampled_for_product(self, height):
        fs = derive_fuzzy_set(height, parse_triple(PRODUCT), "short & medium", 0.01)
        assert not fs.exact
        grid = fs.derived_fn.grid
        expected = [fs_membership(fs, float(x)) for x in grid]
        np.testing.assert_allclose(fs.derived_fn.values, expected, atol=1e-9)

    def test_sampling_is_logged(self, height, caplog):
        with caplog.at_level("INFO", logger="vague_membership.measure"):
            derive_fuzzy_set(height, parse_triple(PRODUCT), "short", 0.01)
        assert "sampling short" in caplog.text

    def test_unbound(self, height, minmax):
        with pytest.raises(BindingError):
            derive_fuzzy_set(height, minmax, "giant")

    @settings(max_examples=60, deadline=None)
    @given(
        e=exprs(set(HEIGHT_NAMES), max_leaves=6),
        x=st.floats(min_value=0.0, max_value=3.0),
        triple_name=st.sampled_from(["standard,min,max", LUKASIEWICZ]),
    )
    def test_exact_path_matches_pointwise(self, e, x, triple_name):
        height, _ = load_bundled("height_nl_2006")
        triple = parse_triple(triple_name)
        fs = derive_fuzzy_set(height, triple, e)
        assert fs.exact
        assert fs.derived_fn(x) == pytest.approx(fs_membership(fs, x), abs=1e-9)


class TestFsCombine:
    """Tests for fs_combine."""

    def test_or(self, height, minmax):
        fs = fs_combine(
            derive_fuzzy_set(height, minmax, "short"),
            derive_fuzzy_set(height, minmax, "medium"),
            "or",
        )
        assert fs.expr == parse("short | medium")
        assert fs.derived_fn(1.5) == pytest.approx(0.625)

    def test_and_keeps_sampling_step(self, height):
        triple = parse_triple(PRODUCT)
        a = derive_fuzzy_set(height, triple, "short", 0.01)
        b = derive_fuzzy_set(height, triple, "medium", 0.01)
        fs = fs_combine(a, b, "and")
        assert fs.expr == And(Atom("short"), Atom("medium"))
        assert fs.derived_fn.step == pytest.approx(0.01)

    def test_cross_partition(self, height, minmax):
        color, _ = load_bundled("ball_color")
        with pytest.raises(CrossPartitionError, match="compositional"):
            fs_combine(
                derive_fuzzy_set(height, minmax, "short"),
                derive_fuzzy_set(color, minmax, "red"),
                "and",
            )

    def test_cross_triple(self, height, minmax):
        with pytest.raises(CrossPartitionError):
            fs_combine(
                derive_fuzzy_set(height, minmax, "short"),
                derive_fuzzy_set(height, parse_triple(LUKASIEWICZ), "short"),
                "or",
            )

    def test_bad_op(self, height, minmax):
        fs = derive_fuzzy_set(height, minmax, "short")
        with pytest.raises(ConstructionError):
            fs_combine(fs, fs, "xor")


class TestSharpnessAndSeparation:
    """Tests for sharpness, separation and consistency."""

    def test_sharpness(self, height, minmax):
        assert sharpness(height, minmax, 1.5).value == pytest.approx(0.625, abs=1e-12)
        assert sharpness(height, parse_triple(LUKASIEWICZ), 1.5).value == 1.0

    def test_separation_minmax(self, height, minmax):
        estimate = separation(height, minmax)
        assert estimate.exact
        assert estimate.value == pytest.approx(0.5)
        assert estimate.witness == pytest.approx(1.55) or estimate.witness == (
            pytest.approx(1.915)
        )

    def test_separation_bounded_sum(self, height):
        assert separation(height, parse_triple(LUKASIEWICZ)).value == pytest.approx(0.0)

    def test_separation_sampled(self, height):
        estimate = separation(height, parse_triple(PRODUCT))
        assert not estimate.exact
        assert estimate.value == pytest.approx(0.25, abs=1e-3)
        assert estimate.method.startswith("grid")

    def test_consistent_degree(self, height, minmax):
        estimate = consistent_degree(height, minmax, "short", "medium")
        assert estimate.value == pytest.approx(0.5)
        assert estimate.witness == pytest.approx(1.55)

    def test_incompatible(self, height, minmax):
        assert not incompatible(height, minmax, "short", "medium")
        assert incompatible(height, minmax, "short", "tall")
        assert incompatible(height, parse_triple(LUKASIEWICZ), "short", "medium")

    def test_intuitionistic_pair(self, height, minmax):
        fs = derive_fuzzy_set(height, minmax, "medium")
        mu, nu = intuitionistic_pair(fs, 1.5)
        assert mu == pytest.approx(0.375)
        assert nu == pytest.approx(0.625)


class TestSpaceProperties:
    """Properties of membership spaces over seeded random corpora."""

    def test_partition_judgements_satisfy_axioms(self, minmax):
        rng = np.random.default_rng(2006)
        domain = Interval(0, 10)
        for _ in range(1000):
            p = random_partition(
                int(rng.integers(1 << 30)),
                domain,
                int(rng.integers(1, 7)),
                regular=bool(rng.integers(2)),
            )
            report = check_axioms(judge(p, float(rng.uniform(0, 10))), minmax)
            assert report.axiom1
            assert report.axiom5

    def test_normal_implies_regular(self, dual_triple):
        rng = np.random.default_rng(45)
        normal_seen = 0
        for _ in range(2500):
            n = int(rng.integers(1, 6))
            degrees = rng.random(n)
            degrees[rng.random(n) < 0.6] = 0.0
            if rng.random() < 0.5:
                degrees[int(rng.integers(n))] = 1.0
            j = Judgement.from_degrees(
                {f"b{i}": float(v) for i, v in enumerate(degrees)}
            )
            report = check_axioms(j, dual_triple)
            if report.normal:
                normal_seen += 1
                assert report.regular
        assert normal_seen > 0


class TestDeepExpressions:
    """Evaluation of very deep expressions."""

    def test_deep_negation(self, minmax):
        j = Judgement.from_degrees({"a": 0.1})
        assert eval_measure(j, minmax, "!" * 3001 + "a") == pytest.approx(0.9)
        assert eval_measure(j, minmax, "!" * 3000 + "a") == 0.1

    def test_long_conjunction(self, height, minmax):
        fs = derive_fuzzy_set(height, minmax, " & ".join(["short"] * 2000))
        assert fs.exact
        assert fs.derived_fn(1.5) == pytest.approx(0.625)

    def test_long_bounded_sum_disjunction(self, height):
        text = " | ".join(["!short"] * 1500)
        fs = derive_fuzzy_set(height, parse_triple(LUKASIEWICZ), text)
        assert fs.derived_fn(1.5) == pytest.approx(1.0)


class TestDeMorgan:
    """De Morgan laws hold for every N-dual triple."""

    @settings(max_examples=200)
    @given(
        left=exprs(set(HEIGHT_NAMES), max_leaves=5),
        right=exprs(set(HEIGHT_NAMES), max_leaves=5),
        degrees=st.fixed_dictionaries({n: dyadic for n in HEIGHT_NAMES}),
        triple_name=st.sampled_from(DUAL_TRIPLES),
    )
    def test_both_laws(self, left, right, degrees, triple_name):
        triple = parse_triple(triple_name)
        j = Judgement.from_degrees(degrees)

        def m(e):
            return eval_measure(j, triple, e)

        assert m(Neg(And(left, right))) == pytest.approx(
            m(Or(Neg(left), Neg(right))), abs=1e-12
        )
        assert m(Neg(Or(left, right))) == pytest.approx(
            m(And(Neg(left), Neg(right))), abs=1e-12
        )
