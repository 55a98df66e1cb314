import pytest

from fusionkit.coefficients import (
    UnsupportedShape,
    count_paths,
    count_restricted_paths,
    duality_check,
    fusion_expand,
    fusion_oracle,
    fusion_rule,
    fusion_single_column,
    fusion_tableaux,
    gepner_witten,
    lr_expand_lattice,
    lr_expand_paths,
    lr_lattice,
    lr_paths,
    restricted_standard_count,
    standard_count,
    verify_restricted_path_identity,
)
from fusionkit.partitions import (
    FusionContext,
    partitions_of,
    partitions_up_to,
    restricted_partitions_of,
    restricted_supersets,
    subpartitions,
)

CTX32 = FusionContext(3, 2)


def test_lr_paths_values():
    assert lr_paths((1,), (1,), (2,)) == 1
    assert lr_paths((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_paths((2, 1), (2, 1), (4, 2)) == 1
    assert lr_paths((1,), (1,), (3,)) == 0  # weight mismatch
    assert lr_paths((1,), (), (1,)) == 1


def test_lr_lattice_values():
    assert lr_lattice((1,), (1,), (1, 1)) == 1
    assert lr_lattice((2, 1), (2, 1), (2, 2, 1, 1)) == 1
    assert lr_lattice((2, 1), (2, 1), (3, 2, 1)) == 2


def test_lr_routes_agree_up_to_seven():
    for nu in partitions_up_to(7):
        for la in subpartitions(nu):
            for mu in partitions_of(sum(nu) - sum(la)):
                assert lr_paths(la, mu, nu) == lr_lattice(la, mu, nu), (la, mu, nu)


def test_expanders_match_single_queries():
    for nu in partitions_up_to(6):
        for la in subpartitions(nu):
            via_paths = lr_expand_paths(la, nu)
            via_lattice = lr_expand_lattice(la, nu)
            for mu in partitions_of(sum(nu) - sum(la)):
                assert via_paths.get(mu, 0) == lr_paths(la, mu, nu)
                assert via_lattice.get(mu, 0) == lr_lattice(la, mu, nu)


def test_single_column_indicator():
    assert fusion_single_column((1,), 2, (2, 1), CTX32) == 1
    assert fusion_single_column((1,), 2, (2, 1), FusionContext(3, 1)) == 0
    assert fusion_single_column((1,), 4, (2, 1, 1, 1), CTX32) == 0  # r > n
    assert fusion_single_column((1,), 2, (3,), CTX32) == 0  # not a strip


def test_fusion_at_su3_level_two():
    # adjoint times adjoint: one singlet-class and one adjoint-class term
    table = fusion_expand((2, 1), (2, 1), CTX32)
    assert table == {(3, 2, 1): 1, (2, 2, 2): 1}
    for nu, value in table.items():
        assert fusion_rule((2, 1), (2, 1), nu, CTX32) == value
        assert fusion_tableaux((2, 1), (2, 1), nu, CTX32) == value


def test_fusion_handles_unrestricted_target():
    assert fusion_rule((2, 1), (2, 1), (4, 2), CTX32) == 0
    assert fusion_oracle((2, 1), (2, 1), (4, 2), CTX32) == 0


def test_fusion_rejects_wide_shapes():
    with pytest.raises(UnsupportedShape):
        fusion_rule((1,), (3, 2, 1), (3, 2, 1, 1), FusionContext(4, 3))
    with pytest.raises(UnsupportedShape):
        fusion_tableaux((1,), (3, 2, 1), (3, 2, 1, 1), FusionContext(4, 3))


def test_fusion_oracle_values():
    ctx = FusionContext(2, 1)
    assert fusion_oracle((1,), (1,), (2,), ctx) == 0
    assert fusion_oracle((1,), (1,), (1, 1), ctx) == 1
    assert fusion_oracle((1,), (1, 1), (2, 1), CTX32) == 1


def test_full_height_shape_counts_every_path():
    # mu with n rows: no level correction is ever needed
    ctx = FusionContext(2, 2)
    for la in [(0,), (1,), (2, 1)]:
        for nu in restricted_supersets(la, 3, ctx):
            assert fusion_rule(la, (2, 1), nu, ctx) == fusion_oracle(la, (2, 1), nu, ctx)


def test_gepner_witten_formula():
    assert gepner_witten((1,), (1,), (2,), 4) == 1
    assert gepner_witten((1,), (1,), (2,), 3) == 0
    with pytest.raises(ValueError):
        gepner_witten((1, 1, 1), (1,), (2, 1, 1), 4)


def test_duality_spot_checks():
    assert duality_check((2, 1), (2, 1), (3, 2, 1), CTX32)
    assert duality_check((2, 1), (2, 1), (2, 2, 2), CTX32)
    # large level: plain conjugation symmetry of the classical numbers
    big = FusionContext(3, 8)
    assert duality_check((2, 1), (2, 1), (3, 2, 1), big)


def test_restricted_standard_counts():
    assert restricted_standard_count((1,), CTX32) == 1
    assert restricted_standard_count((2, 1), CTX32) == 2
    assert restricted_standard_count((2, 1), FusionContext(4, 3)) == 2
    assert restricted_standard_count((2, 1), FusionContext(2, 1)) == 1
    assert restricted_standard_count((), CTX32) == 1


def test_standard_count_matches_restricted_at_big_level():
    big = FusionContext(6, 12)
    for la in partitions_up_to(6, max_len=5):
        assert restricted_standard_count(la, big) == standard_count(la)


def test_count_restricted_paths():
    ctx = FusionContext(2, 1)
    assert count_restricted_paths((1,), (2, 1), ctx) == 1
    assert count_restricted_paths((2, 1), (2, 1), ctx) == 1
    assert count_restricted_paths((1,), (2, 1), FusionContext(3, 3)) == 2
    # endpoints must be restricted
    assert count_restricted_paths((1,), (3, 1), FusionContext(2, 1)) == 0


def test_restricted_path_identity_spots():
    assert verify_restricted_path_identity((1,), (2, 1), FusionContext(2, 1))
    assert verify_restricted_path_identity((1,), (1,), CTX32)
    assert verify_restricted_path_identity((2, 1), (3, 2, 1), CTX32)


def test_classical_path_identity_at_big_level():
    # with the level out of reach the identity reduces to its classical
    # form: all chains against classical coefficients and tableau counts
    big = FusionContext(4, 20)
    for la in [(0,), (1,), (2, 1)]:
        for extra in range(0, 4):
            for nu in restricted_supersets(la, extra, big):
                if len(nu) > 4:
                    continue
                lhs = count_paths(la, nu)
                rhs = sum(
                    lr_paths(la, mu, nu) * standard_count(mu)
                    for mu in partitions_of(extra)
                )
                assert lhs == rhs == count_restricted_paths(la, nu, big)


def test_oracle_never_negative_small_sweep():
    for n in (2, 3):
        for k in (1, 2):
            ctx = FusionContext(n, k)
            for mus in range(1, 4):
                for mu in restricted_partitions_of(mus, ctx):
                    for las in range(0, 3):
                        for la in restricted_partitions_of(las, ctx):
                            for nu in restricted_supersets(la, mus, ctx):
                                assert fusion_oracle(la, mu, nu, ctx) >= 0
