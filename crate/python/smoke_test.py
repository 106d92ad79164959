"""Smoke test for the idcode extension module.

Build and install first, e.g.
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/idcode-*.whl
"""

import idcode


def main():
    p4 = idcode.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert idcode.verify_identifying_code(p4, [0, 1, 2]) == "valid"
    assert idcode.verify_identifying_code(p4, [1, 2]) == "not_separating(1,2)"

    p6 = idcode.Graph.parse("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n")
    assert len(idcode.exact_min_id_code(p6)) == 4
    assert idcode.verify_identifying_code(p6, idcode.greedy_id_code(p6)) == "valid"
    dim, shattered, partial = idcode.vc_dimension(p6)
    assert (dim, len(shattered), partial) == (2, 2, False)
    assert idcode.sauer_lower_bound(10, 2) == 3

    try:
        idcode.exact_min_id_code(idcode.Graph(2, [(0, 1)]))
    except idcode.IdcodeError as err:
        assert "twins: 0,1" in str(err)
    else:
        raise AssertionError("K2 has no identifying code")

    graph, approx = idcode.approx_id_code_interval([(i, i + 1) for i in range(6)])
    assert all(holds for *_, holds in approx.chain)
    assert idcode.verify_identifying_code(graph, approx.code) == "valid"

    graph, code = idcode.c4_free_bipartite_family(4)
    assert graph.n == 10 and graph.is_c4_free() and len(code) == 4

    red = idcode.Reduction(2, [[0], [1]], "ic")
    assert red.graph.n == 40 and red.ell == 7
    code = red.forward([0, 1])
    assert len(code) == 26
    assert red.backward(code) == [0, 1]

    print("smoke test ok")


if __name__ == "__main__":
    main()
