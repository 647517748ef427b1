"""Smoke test for the `genexp` extension module.

Build first, e.g. `maturin develop -m crates/python/Cargo.toml`, then run
`python python/smoke_test.py`.
"""

import genexp


def main():
    theta = genexp.Weight.theta(3)
    assert theta.coords == [1, 0, 0, -1]
    assert theta.height() == 3

    e = genexp.exponents(theta)
    assert str(e) == "t + t^2 + t^3", e
    assert e.terms() == {1: 1, 2: 1, 3: 1}

    shape = genexp.Weight.from_partition([4, 3, 1])
    assert genexp.exponents(shape, "charge").coeff(16) >= 2

    r = genexp.report(genexp.Weight.from_partition([2, 1]))
    assert r["agreement"], r
    assert r["exponents"] == [1, 2]
    assert set(r["per_method"]) == {"weights", "signed", "quasiweights", "tableaux", "charge", "hp"}

    assert str(genexp.c_closed_form(genexp.Weight([1, -1]))) == "-1 + t"
    assert genexp.c_closed_form(genexp.Weight([-1, 1])).is_zero()

    rows = genexp.syt([2, 1])
    assert sorted(row["height"] for row in rows) == [1, 2]
    assert all(row["height"] == row["charge"] for row in rows)

    q = genexp.height_set_inverse([3, 6, 7], 8)
    assert q.coords == [0, 2, 0, 1, 0, 0, -1, -1, -1]
    assert genexp.height_set(q) == [3, 6, 7]

    p = genexp.LaurentPolynomial({0: -1, 1: 1})
    assert (p * p).terms() == {0: 1, 1: -2, 2: 1}
    assert (p + -p).is_zero()

    assert all(passed for _, passed, _, _ in genexp.verify(3))

    try:
        genexp.Weight([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("non sum-zero weight accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
