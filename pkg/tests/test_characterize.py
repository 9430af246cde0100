"""Statement evaluators, profiles, and sweeps."""

import pytest

from mersroot import characterize as ch
from mersroot import numtheory as nt
from mersroot.errors import TheoremDisagreementError


class TestT1Statements:
    def test_examples(self):
        assert ch.t1_statement(7, 5).verdict is True
        assert ch.t1_statement(5, 9).verdict is False
        assert ch.t1_statement(31, 7).verdict is True

    def test_rejects_small_primes(self):
        with pytest.raises(ValueError):
            ch.t1_statement(3, 1)
        with pytest.raises(ValueError):
            ch.t1_statement(2, 1)

    def test_rejects_unknown_statement(self):
        with pytest.raises(ValueError):
            ch.t1_statement(7, 13)

    def test_witnessed_labels(self):
        for k in (2, 3):
            result = ch.t1_statement(11, k)
            assert result.evaluator_kind == "witnessed"

    def test_oracle_vs_direct_routing(self):
        assert ch.t1_statement(13, 4).evaluator_kind == "oracle"
        assert ch.t1_statement(17, 4).evaluator_kind == "direct"
        assert ch.t1_statement(7, 11).evaluator_kind == "oracle"
        assert ch.t1_statement(11, 11).evaluator_kind == "direct"  # scan cap is 9


class TestT2Statements:
    def test_examples(self):
        assert ch.t2_statement(5, 2).verdict is True
        assert ch.t2_statement(7, 3).verdict is False
        assert ch.t2_statement(13, 1).verdict is True

    def test_rejects_two(self):
        with pytest.raises(ValueError):
            ch.t2_statement(2, 1)

    def test_rejects_unknown_statement(self):
        with pytest.raises(ValueError):
            ch.t2_statement(7, 11)

    def test_augmentation_scan_window(self):
        assert ch.t2_statement(17, 4).evaluator_kind == "oracle"  # scan cap is 25
        assert ch.t2_statement(29, 4).evaluator_kind == "direct"


class TestProfile:
    def test_mersenne_seven(self):
        prof = ch.profile(7)
        assert prof.mersenne and not prof.two_rooted
        assert prof.t1_agree and prof.t2_agree
        assert all(r.verdict for r in prof.t1_results)
        assert not any(r.verdict for r in prof.t2_results)
        assert len(prof.t1_results) == 12 and len(prof.t2_results) == 10

    def test_two_rooted_thirteen(self):
        prof = ch.profile(13)
        assert not prof.mersenne and prof.two_rooted
        assert not any(r.verdict for r in prof.t1_results)
        assert all(r.verdict for r in prof.t2_results)
        assert prof.mod8 == 5

    def test_three_gets_reduced_set(self):
        prof = ch.profile(3)
        assert prof.reduced_t1_set
        assert tuple(r.statement_id for r in prof.t1_results) == ch.REDUCED_T1_SET
        assert all(r.verdict for r in prof.t1_results)
        assert prof.mersenne and prof.two_rooted
        assert all(r.verdict for r in prof.t2_results)

    def test_oracle_and_direct_kinds_agree(self):
        # Force the all-direct routing and compare verdicts statement by
        # statement against the oracle-backed run.
        for p in (5, 7, 11, 13):
            with_oracles = ch.profile(p, oracle_cap=13)
            direct_only = ch.profile(p, oracle_cap=0)
            for a, b in zip(with_oracles.t1_results, direct_only.t1_results):
                assert a.verdict == b.verdict, (p, 1, a.statement_id)
            for a, b in zip(with_oracles.t2_results, direct_only.t2_results):
                assert a.verdict == b.verdict, (p, 2, a.statement_id)

    def test_every_result_is_timed(self):
        prof = ch.profile(5)
        assert all(r.elapsed >= 0 for r in prof.t1_results + prof.t2_results)

    def test_to_dict_round_trips_through_json(self):
        import json

        payload = json.loads(json.dumps(ch.profile(7).to_dict()))
        assert payload["p"] == 7 and payload["t1_agree"] is True


class TestSweep:
    def test_range_examples(self):
        profiles = ch.sweep(5, 31)
        summary = ch.sweep_summary(profiles)
        assert summary["mersenne"] == [7, 31]
        assert summary["two_rooted"] == [5, 11, 13, 19, 29]
        assert summary["disagreements"] == 0

    def test_single_prime_three(self):
        profiles = ch.sweep(3, 3)
        assert len(profiles) == 1 and profiles[0].reduced_t1_set

    def test_skips_two(self):
        profiles = ch.sweep(2, 5)
        assert [prof.p for prof in profiles] == [3, 5]

    def test_two_rooted_up_to_100(self):
        profiles = ch.sweep(5, 100)
        assert ch.sweep_summary(profiles)["two_rooted"] == [5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83]

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            ch.sweep(10, 5)

    def test_parallel_matches_serial(self):
        def verdicts(profiles):
            return [
                (prof.p, [r.verdict for r in prof.t1_results], [r.verdict for r in prof.t2_results])
                for prof in profiles
            ]

        assert verdicts(ch.sweep(5, 60)) == verdicts(ch.sweep(5, 60, jobs=2))

    def test_disagreement_aborts(self, monkeypatch):
        real = ch._t1_evaluator

        def lying_evaluator(p, k, ctx):
            if k == 7:
                return (not real(p, k, ctx)[0]), "direct"
            return real(p, k, ctx)

        monkeypatch.setattr(ch, "_t1_evaluator", lying_evaluator)
        with pytest.raises(TheoremDisagreementError) as info:
            ch.sweep(5, 11)
        assert not info.value.profile.t1_agree
        profiles = ch.sweep(5, 11, raise_on_disagreement=False)
        assert ch.sweep_summary(profiles)["disagreements"] == len(profiles)


class TestCrossStatementConsistency:
    def test_verdicts_match_headline_predicates(self):
        for prof in ch.sweep(5, 80):
            assert prof.t1_results[0].verdict == prof.mersenne
            assert prof.t2_results[0].verdict == prof.two_rooted
            assert prof.t1_agree and prof.t2_agree

    def test_mersenne_and_two_rooted_only_at_three(self):
        for p in nt.primes_in_range(3, 3000)[1:]:
            both = nt.is_mersenne_prime(p) and nt.is_two_rooted(p)
            assert both == (p == 3)
