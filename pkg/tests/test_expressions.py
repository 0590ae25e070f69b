import pytest

from sjord.expressions import DivH, ParityOp, UnknownGenerator, comm, generators_for, scalar
from sjord.jordanian import tensor_rep
from sjord.labels import E, T, TINV
from sjord.relations import deformed_relations, sl2_sector_relations, undefined_symbol
from sjord.scalars import DivisibilityFailure, HPoly
from sjord.superlinalg import GradedMatrix, graded_commutator

g = generators_for(2)


def test_expression_folding_matches_matrices():
    dt = tensor_rep(2, "fund2")
    x = g(T) * g(E(2, 3)) - 3 * g(TINV)
    want = dt.matrix(T) @ dt.matrix(E(2, 3)) - dt.matrix(TINV).scale(HPoly.const(3))
    assert dt.eval(x) == want
    assert dt.eval(comm(g(E(2, 3)), g(E(3, 2)))) == graded_commutator(
        dt.matrix(E(2, 3)), dt.matrix(E(3, 2)))


def test_parities():
    assert g(E(2, 3)).parity == 1
    assert (g(E(2, 3)) * g(E(3, 1))).parity == 0
    assert ParityOp().parity == 0
    assert str(ParityOp()) == "(-1)^F"


def test_parity_operator_evaluates():
    dt = tensor_rep(2, "fund")
    assert dt.eval(ParityOp()) == dt.space.parity_operator()


def test_exact_division_by_h():
    dt = tensor_rep(2, "fund2")
    # T - T^-1 = 2 h E12 + O(h^3) is divisible by h
    assert dt.eval(DivH(g(T) - g(TINV), 1)) == dt.classical.matrix(E(1, 2)).scale(HPoly.const(2))
    with pytest.raises(DivisibilityFailure):
        dt.eval(DivH(g(T), 1))


def test_undefined_symbols_raise():
    dt = tensor_rep(3, "fund")
    with pytest.raises(UnknownGenerator):
        dt.eval(undefined_symbol("F31", 3))


def test_relation_lists_are_well_formed():
    assert len(deformed_relations(2)) > 40
    assert len(deformed_relations(3)) > 80
    for n in (2, 3, 4, 5):
        ids = [r.id for r in sl2_sector_relations(n)]
        assert len(ids) == len(set(ids)) == 7
        assert all(i.startswith("sl2:") for i in ids)


def test_scalar_expression():
    dt = tensor_rep(2, "fund")
    assert dt.eval(scalar(2)) == GradedMatrix.identity(dt.space).scale(HPoly.const(2))
