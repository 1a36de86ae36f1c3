import random

import pytest

from pfsym.backend import classify_pf_action
from pfsym.pfaffian import generic_pfaffian
from pfsym.permutations import (
    Permutation,
    compose,
    dihedral_generators,
    enumerate_sym,
    generate_subgroup,
    identity,
)
from pfsym.polyring import Poly, a, x
from pfsym.symmetry import (
    SKEW_GENS,
    SYMMETRIC_GENS,
    act,
    dihedral_group,
    is_dihedral,
    make_group_report,
    pfaffian_symmetry_group,
    sym_of_g,
    symmetry_group,
)

PF4 = generic_pfaffian(4)


def test_act_identity():
    assert act(identity(4), PF4, SYMMETRIC_GENS) == PF4


def test_act_uses_inverse_on_indices():
    # sigma = (2,3,4,1) sends a(1,2) to a(sigma^{-1}(1), sigma^{-1}(2)) = a(4,1) -> a(1,4)
    sigma, _ = dihedral_generators(4)
    assert act(sigma, a(1, 2), SYMMETRIC_GENS) == a(1, 4)


def test_act_reflection_fixes_pfaffian():
    assert act(Permutation([1, 4, 3, 2]), PF4, SYMMETRIC_GENS) == PF4


def test_act_reversal_fixes_pfaffian():
    assert act(Permutation([4, 3, 2, 1]), PF4, SYMMETRIC_GENS) == PF4


def test_act_transposition_negates_skew_pfaffian():
    assert act(Permutation([2, 1, 3, 4]), PF4, SKEW_GENS) == -PF4


def test_act_skew_sign_respects_exponents():
    # a(1,2)^2 picks up (-1)^2 = +1 under an index swap in skew mode
    swap = Permutation([2, 1])
    assert act(swap, a(1, 2) ** 2, SKEW_GENS) == a(1, 2) ** 2
    assert act(swap, a(1, 2), SKEW_GENS) == -a(1, 2)


def test_act_index_out_of_range():
    with pytest.raises(ValueError):
        act(Permutation([2, 1]), x(3), SYMMETRIC_GENS)
    with pytest.raises(ValueError):
        act(Permutation([2, 1]), a(1, 3), SYMMETRIC_GENS)
    with pytest.raises(ValueError):
        act(Permutation([2, 1]), a(1, 2), "weird")


def test_act_composition_law(rng):
    # with indices relabeled through the inverse, acting with p after q
    # telescopes to acting with compose(q, p)
    for m in (4, 5, 6):
        pool = [x(i) for i in range(1, m + 1)] + [a(1, 2), a(2, 3), a(1, m)]
        for _ in range(15):
            f = Poly.zero()
            for _ in range(3):
                f = f + rng.choice(pool) * rng.choice(pool) - 2 * rng.choice(pool)
            p = Permutation(rng.sample(range(1, m + 1), m))
            q = Permutation(rng.sample(range(1, m + 1), m))
            for mode in (SYMMETRIC_GENS, SKEW_GENS):
                assert act(p, act(q, f, mode), mode) == act(compose(q, p), f, mode)


def test_symmetry_group_pf4_dihedral():
    report = symmetry_group(PF4, 4, SYMMETRIC_GENS)
    assert report.order == 8
    assert report.equals_dihedral is True
    assert report.witness is None
    assert is_dihedral(report, 4)


def test_skew_symmetry_group_pf4_is_full():
    report = symmetry_group(PF4, 4, SKEW_GENS, signed=True)
    assert report.order == 24
    assert report.equals_dihedral is False
    assert report.witness is not None
    assert not is_dihedral(report, 4)


def test_symmetry_group_of_constant():
    report = symmetry_group(Poly.const(1), 3, SYMMETRIC_GENS)
    assert report.order == 6
    assert report.equals_dihedral is None


def test_symmetry_group_cap():
    with pytest.raises(ValueError):
        symmetry_group(PF4, 9, SYMMETRIC_GENS)


def test_is_dihedral_examples():
    sigma, _ = dihedral_generators(6)
    cyclic = make_group_report(generate_subgroup([sigma]), 6)
    assert cyclic.order == 6
    assert not is_dihedral(cyclic, 6)
    with pytest.raises(ValueError):
        is_dihedral(cyclic, 4)


def test_group_report_requires_closure():
    sigma, tau = dihedral_generators(4)
    with pytest.raises(RuntimeError, match="closed"):
        make_group_report([identity(4), sigma, tau], 4)
    with pytest.raises(RuntimeError, match="identity"):
        make_group_report([sigma], 4)


def test_group_report_json():
    report = symmetry_group(PF4, 4, SYMMETRIC_GENS)
    obj = report.to_json_obj()
    assert obj["order"] == 8
    assert obj["equals_dihedral"] is True
    assert obj["witness"] is None
    assert len(obj["elements"]) == 8
    assert obj["elements"][0] == [1, 2, 3, 4]


def test_dihedral_invariance_exhaustive():
    for two_n in (2, 4, 6, 8):
        pf = generic_pfaffian(two_n)
        for d in dihedral_group(two_n):
            assert act(d, pf, SYMMETRIC_GENS) == pf


def test_skew_action_is_sign_character():
    for two_n in (2, 4, 6):
        pf = generic_pfaffian(two_n)
        for p in enumerate_sym(two_n):
            expected = pf if p.sign == 1 else -pf
            assert act(p, pf, SKEW_GENS) == expected


def test_theorem_groups_at_orders_four_and_six():
    for two_n in (4, 6):
        report = symmetry_group(generic_pfaffian(two_n), two_n, SYMMETRIC_GENS)
        assert report.order == 2 * two_n
        assert is_dihedral(report, two_n)


def test_sym_of_g_examples():
    assert sym_of_g(2).order == 2
    report4 = sym_of_g(4)
    assert report4.order == 8 and report4.equals_dihedral is True
    report6 = sym_of_g(6)
    assert report6.order == 12 and report6.equals_dihedral is True


def test_classifier_matches_polynomial_action_exhaustively():
    for two_n in (4, 6):
        pf = generic_pfaffian(two_n)
        for skew, mode in ((False, SYMMETRIC_GENS), (True, SKEW_GENS)):
            for p in enumerate_sym(two_n):
                image = act(p, pf, mode)
                if image == pf:
                    expected = 1
                elif image == -pf:
                    expected = -1
                else:
                    expected = 0
                assert classify_pf_action(two_n, p, skew) == expected, (p, mode)


def test_fast_group_matches_generic():
    for two_n in (4, 6):
        for mode in (SYMMETRIC_GENS, SKEW_GENS):
            for signed in (False, True):
                fast = pfaffian_symmetry_group(two_n, mode, signed=signed)
                slow = symmetry_group(generic_pfaffian(two_n), two_n, mode, signed=signed)
                assert fast.elements == slow.elements


def test_parallel_scan_matches_serial():
    serial = symmetry_group(PF4, 4, SYMMETRIC_GENS)
    parallel = symmetry_group(PF4, 4, SYMMETRIC_GENS, processes=2)
    assert parallel.elements == serial.elements


def test_zero_polynomial_is_fixed_by_everything():
    report = symmetry_group(Poly.zero(), 4, SKEW_GENS)
    assert report.order == 24
