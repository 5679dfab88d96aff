"""Smoke tests for the python bindings: the worked values, one function from
each surface, and big-integer round-tripping."""

try:
    import _composet as m
except ModuleNotFoundError:  # installed-package layout
    from composet import _composet as m


def test_worked_mobius_values():
    chain3 = m.make_chain(3)
    assert m.mobius("2,1,1,1,3", "2,2,1,1,1,3,3", chain3, method="normal") == 2
    assert m.mobius("2,1,1,1,3", "2,2,1,1,1,3,3", chain3, method="oracle") == 2
    ab = m.make_antichain(2)
    assert m.mobius("a,b,b,a", "a,b,a,b,b,b,a,a", ab, method="normal") == 2


def test_posets():
    lam = m.make_lambda()
    assert not lam.rooted_forest
    assert lam.element_names == ["a", "b", "c"]
    assert m.make_chain(4).rooted_forest
    custom = m.Poset('{"elements": ["x", "y"], "covers": [["x", "y"]]}')
    assert custom.size == 2


def test_order_and_intervals():
    chain6 = m.make_chain(6)
    assert m.leq_words("3,3,4", "3,4,2,6,1", chain6)
    chain2 = m.make_chain(2)
    assert sorted(m.interval("1", "2,1", chain2)) == ["1", "1,1", "2", "2,1"]
    assert m.zeta_power("eps", "1", 2, chain2) == 2


def test_embeddings():
    chain3 = m.make_chain(3)
    found = m.embeddings("2,1,1,1,3", "2,2,1,1,1,3,3", chain3, normal=True)
    assert sorted(found) == [("2,0,1,1,1,3,0", 0), ("2,1,0,1,1,3,0", 2)]


def test_series_and_automata():
    chain2 = m.make_chain(2)
    terms = dict(m.series("M", "1", chain2, grading="length", bound=2))
    assert terms["1"] == 1 and terms["1,1"] == -1 and terms["2,1"] == 1
    pairs = {(u, w): c for u, w, c in m.automaton_accept("M", 2, 2)}
    assert pairs[("1", "1,1")] == -1 and pairs[("1", "2")] == -1
    assert "alpha" in m.automaton_dump("Z", 3)


def test_generating_functions():
    assert str(m.m_len([0, 0], 2)) == "1 - t"
    rank = m.z_p_norm([])
    assert rank.taylor(16)[16] == 2**15
    a1, b1 = m.closed_am_bm(1, grading="length")
    assert str(a1) == "2*t"
    assert m.zeta_power_genfun([0, 0], 2, 2, grading="norm").taylor(1)[1] == 2


def test_chebyshev_and_lambda():
    assert m.chebyshev_t(2) == [-1, 0, 2]
    mu, coeff, agree = m.check_lambda(1, 1)
    assert (mu, coeff, agree) == (-1, -1, True)


def test_verification_surfaces():
    ok, checks = m.verify_telescoping(n=6, grading="norm", bound=6)
    assert ok and len(checks) == 4
    assert "all findings confirmed" in m.discrepancy_report()


def test_cli_passthrough():
    code, out, err = m.run_cli(
        ["mobius", "2,1,1,1,3", "2,2,1,1,1,3,3", "--poset", "chain:3", "--method", "both"]
    )
    assert code == 0 and out == "mu=2 agree=true\n" and err == ""


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
