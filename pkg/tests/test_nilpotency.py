"""Tests for direct-sum specifications, the nilpotency index and its certification."""

import itertools
import sys
from pathlib import Path

import pytest

# Add src to path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))
sys.path.insert(0, str(src_path.parent))

from nilpotency.certifier import certify, enumerate_paths
from nilpotency.index import (
    max_rule_free_length,
    max_rule_free_path,
    nilpotency_index,
    proof_family,
    uses_c0_rule,
    witness_chain,
)
from nilpotency.rules import RuleCertificate, RuleName, rule_check_path
from nilpotency.spec import DirectSumSpec, canonicalize, format_spec, parse_spec
from spaces.labels import SpaceLabel
from spaces.order import strictly_precedes

B2, B3 = SpaceLabel.bp(2.0), SpaceLabel.bp(3.0)
L2, L3 = SpaceLabel.lp(2.0), SpaceLabel.lp(3.0)
S1, S2 = SpaceLabel.sp(1.0), SpaceLabel.sp(2.0)
C0 = SpaceLabel.c0()


def spec(L=(), M=(), N=(), c0=False):
    return DirectSumSpec(L=L, M=M, N=N, include_c0=c0)


def subsets(values):
    return [
        combo for size in range(len(values) + 1) for combo in itertools.combinations(values, size)
    ]


def grid_specs():
    specs = []
    for L, M, N in itertools.product(
        subsets((2.0, 3.0)), subsets((1.0, 2.0, 3.0)), subsets((1.0, 2.0))
    ):
        for c0 in (False, True):
            if L or M or N or c0:
                specs.append(spec(L=L, M=M, N=N, c0=c0))
    return specs


def test_parse_spec():
    parsed = parse_spec("L=2,3; M=1; N=1,2; c0=false")
    assert parsed == spec(L=(2, 3), M=(1,), N=(1, 2))
    assert parse_spec("L=2;M=;N=") == spec(L=(2,))
    assert parse_spec("n=1; C0=true").include_c0
    assert parse_spec(format_spec(parsed)) == parsed


@pytest.mark.parametrize(
    "text",
    ["L=1", "M=0.5", "L=2; L=3", "K=2", "L=abc", "M=", "L=2; c0=maybe", "L 2"],
)
def test_parse_spec_errors(text):
    with pytest.raises(ValueError):
        parse_spec(text)


def test_spec_deduplicates_and_sorts():
    assert spec(L=(3, 2, 3)).L == (2.0, 3.0)


def test_canonicalize():
    assert canonicalize(spec(L=(2,), M=(2, 3))).M == (3.0,)
    assert canonicalize(spec(N=(1,), c0=True)).include_c0 is False
    already = spec(L=(2,), M=(3,), N=(1,))
    assert canonicalize(already) == already
    assert canonicalize(canonicalize(spec(L=(2,), M=(2,), c0=True))) == canonicalize(
        spec(L=(2,), M=(2,), c0=True)
    )


def test_nilpotency_index_examples():
    assert nilpotency_index(spec(L=(2,))) == 1
    assert nilpotency_index(spec(L=(1.5, 2, 3, 4))) == 7
    assert nilpotency_index(spec(N=(1, 2, 3))) == 3
    assert nilpotency_index(spec(M=(1, 2, 5))) == 2
    assert nilpotency_index(spec(L=(2, 3), M=(1,), N=(1, 2))) == 7
    assert nilpotency_index(spec(L=(2,), c0=True)) == 2
    assert nilpotency_index(spec(c0=True)) == 0


def test_index_ignores_what_canonicalize_removes():
    raw = spec(L=(2,), M=(2, 3), N=(1,), c0=True)
    assert nilpotency_index(raw) == nilpotency_index(canonicalize(raw))


def test_witness_chain_examples():
    assert witness_chain(spec(L=(2,))) == [B2, L2]
    assert witness_chain(spec(N=(1,))) == [S1, C0]
    chain = witness_chain(spec(L=(2,), M=(3,), N=(1,)))
    assert chain == [B2, S1, L2, L3, C0]
    assert len(chain) == nilpotency_index(spec(L=(2,), M=(3,), N=(1,))) + 1


def test_witness_chain_is_strictly_increasing_and_rule_free():
    choices_L = [(), (1.5,), (2.0, 3.0)]
    choices_M = [(), (1.0,), (2.0,)]
    choices_N = [(), (1.0, 2.0)]
    for L, M, N in itertools.product(choices_L, choices_M, choices_N):
        for c0 in (False, True):
            if not (L or M or N or c0):
                continue
            s = spec(L=L, M=M, N=N, c0=c0)
            chain = witness_chain(s)
            assert len(chain) == nilpotency_index(s) + 1
            assert all(strictly_precedes(a, b) for a, b in zip(chain, chain[1:]))
            assert rule_check_path(chain, uses_c0_rule(s)) is None
            assert max_rule_free_length(s) == nilpotency_index(s) + 1
            assert len(max_rule_free_path(s)) == max_rule_free_length(s)
            assert rule_check_path(max_rule_free_path(s), uses_c0_rule(s)) is None


def test_rule_check_path_examples():
    assert rule_check_path([B2, B2, B2]) == RuleCertificate(
        rule=RuleName.B3, space=B2, positions=(1, 2, 3)
    )
    assert rule_check_path([S1, S1, C0]) == RuleCertificate(
        rule=RuleName.S2, space=S1, positions=(1, 2)
    )
    assert rule_check_path([S1, C0, S1]) is None
    assert rule_check_path([L2, B2, L2]).rule is RuleName.L2
    assert rule_check_path([]) is None


def test_c0_rule_only_when_requested():
    assert rule_check_path([C0, C0]) is None
    assert rule_check_path([C0, C0], c0_rule=True).rule is RuleName.L2
    assert uses_c0_rule(spec(L=(2,), c0=True))
    assert not uses_c0_rule(spec(N=(1,), c0=True))


def test_rule_certificate_shape():
    with pytest.raises(ValueError):
        RuleCertificate(rule=RuleName.B3, space=B2, positions=(1, 2))
    with pytest.raises(ValueError):
        RuleCertificate(rule=RuleName.L2, space=L2, positions=(2, 1))


def test_max_rule_free_length_examples():
    assert max_rule_free_length(spec(L=(2,))) == 2
    assert max_rule_free_length(spec(M=(2, 3))) == 2
    assert max_rule_free_length(spec(L=(2,), M=(3,), N=(1,))) == 5


def test_proof_family():
    assert proof_family(spec(L=(2,), M=(2, 3), N=(1,), c0=True)) == [B2, S1, L3]
    assert proof_family(spec(M=(2,), c0=True)) == [L2, C0]


def test_certify_single_baernstein_summand():
    report = certify(spec(L=(2,)), exhaustive_limit=10**6)
    assert report.k == 1
    assert report.nilpotency_index == 2
    assert report.exhaustive_paths_checked == 1
    assert report.sample_certificates[0].rule is RuleName.B3
    assert list(report.witness_chain) == [B2, L2]
    assert report.witness_rule_free
    assert report.passed


def test_certify_single_lq_summand():
    report = certify(spec(M=(2,)))
    assert report.k == 0
    assert list(report.witness_chain) == [L2]
    assert report.sample_certificates[0].rule is RuleName.L2
    assert report.passed


def test_certify_two_schreier_summands():
    report = certify(spec(N=(1, 2)))
    assert report.k == 2
    assert report.exhaustive_paths_checked == 16
    assert list(report.witness_chain) == [S1, S2, C0]
    assert report.all_long_paths_forced
    assert report.passed


def test_certify_mixed_exhaustively():
    report = certify(spec(L=(2,), M=(3,), N=(1,)))
    assert report.k == 4
    assert report.exhaustive_paths_checked == 3**6
    assert report.unforced_path is None
    assert report.passed


def test_certify_falls_back_to_counting_bound():
    report = certify(spec(L=(2, 3), M=(1,), N=(1, 2)), exhaustive_limit=100)
    assert report.k == 7
    assert report.exhaustive_paths_checked is None
    assert report.all_long_paths_forced
    assert report.passed
    assert report.model_dump(mode="json")["nilpotency_index"] == 8


def test_enumerate_paths_finds_unforced_paths():
    checked, unforced, _ = enumerate_paths([S1, S2], 3, c0_rule=False)
    assert unforced is not None
    assert rule_check_path(unforced) is None
    assert checked >= 1


def test_enumerate_paths_with_workers_matches_serial():
    serial = enumerate_paths([S1, S2], 4, c0_rule=False)
    pooled = enumerate_paths([S1, S2], 4, c0_rule=False, workers=2)
    assert serial[0] == pooled[0] == 16
    assert serial[1] is None and pooled[1] is None


def test_cert_report_json_round_trip():
    report = certify(spec(L=(2,), c0=True))
    restored = type(report).model_validate_json(report.model_dump_json())
    assert restored.k == report.k
    assert restored.witness_chain == report.witness_chain


def test_grid_has_every_spec():
    assert len(grid_specs()) == 127


@pytest.mark.parametrize("s", grid_specs(), ids=format_spec)
def test_certify_over_the_parameter_grid(s):
    report = certify(s, exhaustive_limit=10**6)
    paths = len(proof_family(s)) ** (report.k + 2)
    assert report.max_rule_free_length == report.k + 1
    assert report.witness_rule_free
    if paths <= 10**6:
        assert report.exhaustive_paths_checked == paths
        assert report.unforced_path is None
    else:
        assert report.exhaustive_paths_checked is None
    assert report.all_long_paths_forced
    assert report.passed


def test_index_grows_with_new_parameters():
    for s in grid_specs():
        k = nilpotency_index(s)
        assert nilpotency_index(spec(L=s.L + (4.0,), M=s.M, N=s.N, c0=s.include_c0)) == k + 2
        assert nilpotency_index(spec(L=s.L, M=s.M + (5.0,), N=s.N, c0=s.include_c0)) == k + 1
        grown = nilpotency_index(spec(L=s.L, M=s.M, N=s.N + (6.0,), c0=s.include_c0))
        # the first Schreier summand also brings c_0 into the witness chain
        assert grown == (k + 1 if s.N or s.include_c0 else k + 2)


def test_repeated_schreier_label_is_free_only_at_the_end():
    for s in grid_specs():
        if not s.N:
            continue
        chain = witness_chain(s)
        c0_rule = uses_c0_rule(s)
        for r in s.N:
            label = SpaceLabel.sp(r)
            assert rule_check_path(chain + [label], c0_rule) is None
            for position in range(len(chain)):
                path = chain[:position] + [label] + chain[position:]
                certificate = rule_check_path(path, c0_rule)
                assert certificate.rule is RuleName.S2
                assert certificate.space == label
