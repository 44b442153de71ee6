"""Smoke tests for the python module: every wrapper runs once against a value
the CLI test suite also pins down."""

import tripoints as tp


def test_build_and_audit():
    arr = tp.build("char3", 3, 2)
    assert arr.splitlines()[0] == "field p=3 n=2 modulus=1,0,1"
    assert tp.spectrum(arr) == {3: 12}
    report = tp.audit(arr)
    assert "lines=9" in report
    assert "t[3]=12" in report
    assert "reference.t[3].q(q-1)/6=12 match" in report

    generic = tp.build("generic", 7, 1)
    assert tp.spectrum(generic) == {2: 6, 3: 5}
    assert "MISMATCH (not an integer)" in tp.audit(generic)


def test_matroid_roundtrip():
    arr = tp.build("char2", 2, 3)
    extracted = tp.extract_triples(arr)
    fano = tp.make_projection(3)
    assert extracted == tp.make_sum(2, 3)
    assert tp.is_steiner(extracted)

    witness = tp.isomorphic(extracted, fano)
    assert witness is not None
    assert sorted(witness) == list(range(1, 8))
    assert tp.isomorphic(fano, tp.make_projection(4)) is None

    assert tp.automorphism_order(fano) == 168
    assert tp.restrict(tp.make_zero_sum(3, 2), [0, 1, 2]) == "ground 0 1 2\n0 1 2\n"


def test_realize():
    fano = tp.make_projection(3)
    res = tp.realize(fano, 2, 1)
    assert res["status"] == "REALIZABLE"
    assert res["witness_count"] == 1
    assert res["witnesses"][0][1] == "1:0:0"
    assert tp.realize(fano, 3, 1)["status"] == "UNREALIZABLE"
    # An aborted search stays agnostic.
    m9 = tp.make_zero_sum(3, 2)
    assert tp.realize(m9, 5, 1, node_limit=1)["status"] == "UNKNOWN"


def test_ideal_and_cubic_fit():
    ideal = tp.export_ideal(tp.make_projection(3), normalize=True)
    assert ideal.startswith("ring vars=x3,y3,z3,x5,y5,z5,x6,y6,z6\n")
    assert "== vanishing ==" in ideal

    arr = tp.build("char2", 2, 4)
    fit = tp.cubic_fit(tp.dual_points(arr))
    assert fit["dim"] == 1
    assert fit["kinds"] == ["cusp"]
    assert fit["singular"] == [["0:0:1"]]


def test_group_law():
    # F_9 with modulus t^2 + 1: t * t = 2 means encode(3)^2 would be 2, and
    # the chord-tangent sum of encodes 1 and 3 is 1 + t, encode 4.
    assert tp.group_add(3, 2, 1, 3) == 4
    assert tp.group_add(2, 3, 5, 5) == 0  # char 2: a + a = 0
    assert tp.collinear_params(3, 2, 1, 3, 8)  # 1 + t + (2 + 2t) = 0
    assert not tp.collinear_params(3, 2, 1, 3, 4)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as exc:
                print(f"FAIL {name}: {exc}")
                failures += 1
    raise SystemExit(1 if failures else 0)
