import pytest

from orblab.errors import ValidationError
from orblab.groups import build_group
from orblab.scalar import ONE
from orblab.structure import (
    fixed_point_table,
    heisenberg_seed,
    jacobi_check,
    unit1_seed,
    vacuum_seed,
)
from orblab.structure.jacobi import gbinom
from orblab.structure.seed import validate_table


def test_gbinom():
    assert gbinom(5, 2) == 10
    assert gbinom(-1, 3) == -1
    assert gbinom(-2, 2) == 3
    assert gbinom(3, -1) == 0


@pytest.mark.parametrize("seed", [vacuum_seed(), unit1_seed(), heisenberg_seed(2)],
                         ids=["vac", "unit1", "heis2"])
def test_seeds_pass(seed):
    rep = jacobi_check(seed)
    assert rep.passed and not rep.failures


def test_heis3_passes():
    rep = jacobi_check(heisenberg_seed(3))
    assert rep.passed and rep.checked > 10000


@pytest.mark.parametrize("spec", [("S", 2), ("S", 3), ("Z", 3)])
def test_fixed_point_tables_pass(spec):
    t = fixed_point_table(build_group(*spec), heisenberg_seed(2))
    rep = jacobi_check(t, cap=2)
    assert rep.passed and rep.checked > 0


def test_corrupted_table_fails_with_witness():
    t = heisenberg_seed(2)
    t.constants[("a11", "a", "a")] = t.constants[("a11", "a", "a")] + 1
    rep = jacobi_check(t, stop_at_first=True)
    assert not rep.passed
    w = rep.failures[0]
    assert {"e", "a", "b", "c", "m", "n", "k", "lhs", "rhs"} <= set(w)
    assert w["lhs"] != w["rhs"]
    with pytest.raises(ValidationError) as exc:
        validate_table(t)
    assert exc.value.witness == w


def test_cap_clipped_to_cutoff():
    rep = jacobi_check(unit1_seed(), cap=5)
    assert rep.cap == 1 and rep.passed


def test_inserted_cubic_on_unit1_fails():
    t = unit1_seed()
    t.constants[("a", "a", "a")] = ONE
    assert not jacobi_check(t).passed
