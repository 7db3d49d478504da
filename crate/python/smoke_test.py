"""Smoke test for the wittsat_py extension.

Build and install first:

    pip install --no-build-isolation ./crates/python
"""

import itertools

import wittsat_py as ws


def brute_count(f):
    return sum(f.evaluate(list(bits)) for bits in itertools.product([False, True], repeat=f.n))


def main():
    contradiction = ws.Formula(1, [[1], [-1]])
    assert contradiction.is_unsatisfiable()
    assert contradiction.covers()
    assert contradiction.dpll() is None
    assert contradiction.encode().is_zero()

    f = ws.Formula.from_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n")
    s = f.encode()
    assert not f.is_unsatisfiable()
    assert f.count_models() == brute_count(f) == s.total()
    assert sorted(f.models()) == sorted(f.brute_force())
    assert s * s == s
    w = f.witness()
    assert w is not None and f.evaluate(w)
    assert f.patterns() == ["+-*", "*++"]

    rho1 = ws.DiagonalElement.literal(2, 0)
    bar1 = ws.DiagonalElement.literal(2, 0, negated=True)
    assert (rho1 * bar1).is_zero()
    assert rho1 + bar1 == ws.DiagonalElement.identity(2)
    assert rho1.eval_at([True, False]) == 1

    assert ws.mtnp_of_spinor("pq p q qp") == ["p1", "p2", "q3", "q4"]
    assert ws.vector_action("p1", "qp") == "1 * p"
    assert ws.vector_action("p2", "p q") == "-1 * p pq"
    assert ws.vector_action("p1", "pq") is None

    t = ws.sample_orthogonal(3, 7)
    assert t == ws.sample_orthogonal(3, 7)
    basis = ws.witt_rebase([[1, 0], [0, 1]], [[0, -1], [1, 0]])
    assert basis["pairing_residual"] < 1e-9 and basis["plane_residual"] < 1e-9
    try:
        ws.witt_rebase([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    except ValueError as e:
        assert "dimension 2" in str(e)
    else:
        raise AssertionError("identical planes accepted")

    four = ws.Formula(2, [[1, 2], [-1, 2], [1, -2], [-1, -2]])
    report = four.explore(samples=200, seed=1)
    assert report["discrete_cover"] is True and report["strict_fraction"] == 0.0
    assert report == four.explore(samples=200, seed=1)

    print("smoke test passed")


if __name__ == "__main__":
    main()
