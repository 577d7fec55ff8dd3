"""Brute-force certification machinery: code enumeration, perfectness
reports, the signature identity, and the pivot-relation suite."""

import random
from itertools import permutations as iter_permutations
from math import factorial

import pytest
from hypothesis import given

from permdel import (
    BoundExceededError,
    CodeParams,
    DigitMessage,
    Permutation,
    certify_partition,
    check_parity_lemmas,
    check_perfect,
    compose,
    digits_from_message,
    encode,
    enumerate_code,
    find_parity_lemma_violation,
    inverse,
    parity,
    rep_naive,
    suffix_rotation,
    vt_signature_check,
)
from goldens import (
    PROFILE_AUX_DIGITS,
    PROFILE_CANDIDATE_DIGITS,
    PROFILE_CANDIDATE_INVERSES,
    PROFILE_PARITIES,
    PROFILE_RHO,
    S4_CODEBOOKS,
)
from strategies import permutations


class TestEnumerateCode:
    def test_golden_codebook(self):
        code = enumerate_code(CodeParams(4, 0))
        assert [c.values for c in code] == sorted(S4_CODEBOOKS[0])

    def test_all_length_four_codebooks(self):
        for t, table in S4_CODEBOOKS.items():
            code = enumerate_code(CodeParams(4, t))
            assert {c.values for c in code} == set(table)

    def test_sizes_small(self):
        for n in range(2, 6):
            for t in range(n):
                assert len(enumerate_code(CodeParams(n, t))) == factorial(n - 1)

    def test_length_two(self):
        assert len(enumerate_code(CodeParams(2, 0))) == 1
        assert len(enumerate_code(CodeParams(2, 1))) == 1

    def test_matches_encoder_image(self):
        for n in range(2, 6):
            for t in range(n):
                params = CodeParams(n, t)
                enumerated = {c.values for c in enumerate_code(params)}
                image = {
                    encode(params, digits_from_message(n, m)).values
                    for m in range(factorial(n - 1))
                }
                assert enumerated == image

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            enumerate_code(CodeParams(9, 0))
        assert len(enumerate_code(CodeParams(9, 0), bound=9)) == factorial(8)


class TestCheckPerfect:
    def test_length_four(self):
        report = check_perfect(4)
        assert report.ok
        assert report.code_sizes == (6, 6, 6, 6)
        assert report.partition and report.balls_disjoint and report.decode_ok
        assert report.counterexamples == ()

    def test_length_two_and_three(self):
        assert check_perfect(2).code_sizes == (1, 1)
        assert check_perfect(3).ok

    def test_report_serialization(self):
        report = check_perfect(3)
        lines = report.text_lines()
        assert "n: 3" in lines
        assert "ok: true" in lines
        d = report.as_dict()
        assert d["ok"] is True and d["code_sizes"] == [2, 2, 2]

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            check_perfect(9)

    def test_fault_injection_is_reported(self):
        codes = {
            t: [Permutation(v) for v in sorted(table)]
            for t, table in S4_CODEBOOKS.items()
        }
        # swap one codeword into the wrong class
        moved = codes[0].pop()
        codes[1].append(moved)
        report = certify_partition(4, codes)
        assert not report.ok
        assert not report.partition
        assert report.counterexamples


class TestVtSignature:
    def test_worked_example_numbers(self):
        rho = Permutation((1, 3, 4, 0, 5, 2))
        assert parity(rep_naive(rho)) == 13
        c = inverse(rho).values
        assert c == (3, 0, 5, 1, 2, 4)
        weighted = sum(j for j in range(1, 6) if c[j] > c[j - 1])
        assert weighted == 11
        assert (13 + 11) % 6 == 0
        assert vt_signature_check(rho)

    def test_identity_closed_form(self):
        # digit sum n(n+1)/2 plus ascent weight n(n-1)/2 is n^2
        for n in range(1, 12):
            assert vt_signature_check(Permutation(tuple(range(n))))

    def test_exhaustive_length_five(self):
        for vals in iter_permutations(range(5)):
            assert vt_signature_check(Permutation(vals))

    @given(permutations(max_n=80))
    def test_random(self, rho):
        assert vt_signature_check(rho)


class TestParityLemmas:
    def test_profile_case_columns(self):
        rho = Permutation(PROFILE_RHO)
        n = rho.n
        for i in range(n):
            cand = compose(suffix_rotation(n, n - 1 - i, 1), rho)
            assert inverse(cand).values == PROFILE_CANDIDATE_INVERSES[i]
            alpha = rep_naive(cand)
            assert alpha.components == PROFILE_CANDIDATE_DIGITS[i]
            assert parity(alpha) == PROFILE_PARITIES[i]
        # auxiliary vector of the shrunken word (0,2,4,3) -> (0,1,3,2)
        shrunk = Permutation((0, 1, 3, 2))
        assert rep_naive(inverse(shrunk)).components == PROFILE_AUX_DIGITS
        assert check_parity_lemmas(rho)

    def test_exhaustive_small(self):
        for n in range(1, 6):
            for vals in iter_permutations(range(n)):
                violation = find_parity_lemma_violation(Permutation(vals))
                assert violation is None, (vals, violation)

    def test_random_length_fifty(self):
        rng = random.Random(123)
        for _ in range(1000):
            vals = list(range(50))
            rng.shuffle(vals)
            assert check_parity_lemmas(Permutation(tuple(vals)))


class TestConsecutiveParityGroundTruth:
    def test_candidate_parities_are_consecutive_runs(self):
        # recomputed from scratch per candidate: the sorted parities of the
        # n reinsertion candidates form a run of consecutive integers that
        # contains the base parity
        for n in range(1, 7):
            for vals in iter_permutations(range(n)):
                rho = Permutation(vals)
                pars = sorted(
                    parity(rep_naive(compose(suffix_rotation(n, n - 1 - i, 1), rho)))
                    for i in range(n)
                )
                assert pars == list(range(pars[0], pars[0] + n))
                assert pars[0] <= parity(rep_naive(rho)) <= pars[-1]

    def test_ball_union_tiles_everything(self):
        # one codebook's deletion balls cover each permutation exactly once
        for n in range(2, 6):
            for t in range(n):
                members = []
                for cw in enumerate_code(CodeParams(n, t)):
                    vals = cw.values
                    members.extend(
                        vals[:i] + vals[i + 1 :] + (vals[i],) for i in range(n)
                    )
                assert len(members) == factorial(n)
                assert len(set(members)) == factorial(n)
