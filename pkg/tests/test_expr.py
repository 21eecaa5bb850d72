import json
import random

import pytest

from immaculate.expr import BasisExpr, normalize_h_index


def test_normalize_deletes_zeros():
    assert normalize_h_index((3, 0, 3)) == (3, 3)


def test_normalize_negative_kills():
    assert normalize_h_index((1, -1, 2)) is None


def test_normalize_identity_on_strong():
    assert normalize_h_index((2, 5, 3)) == (2, 5, 3)


def test_normalize_idempotent():
    rng = random.Random(7)
    for _ in range(100):
        raw = tuple(rng.randint(-2, 4) for _ in range(rng.randint(0, 5)))
        out = normalize_h_index(raw)
        if out is not None:
            assert normalize_h_index(out) == out


def test_add_cancellation():
    a = BasisExpr.term("H", (2,))
    assert not (a + (-a))


def test_add_disjoint_support():
    x = BasisExpr.term("H", (3,)) + BasisExpr.term("H", (2, 1))
    assert x.coefficient((3,)) == 1 and x.coefficient((2, 1)) == 1


def test_add_combines_coefficients():
    x = BasisExpr.term("H", (1,), 2) + BasisExpr.term("H", (1,), 3)
    assert x == BasisExpr.term("H", (1,), 5)


def test_add_basis_mismatch():
    with pytest.raises(ValueError):
        BasisExpr.term("H", (1,)) + BasisExpr.term("R", (1,))


def test_multiply_concatenates():
    x = BasisExpr.term("H", (2,)) * BasisExpr.term("H", (3, 1))
    assert x == BasisExpr.term("H", (2, 3, 1))


def test_multiply_bilinear():
    x = (BasisExpr.term("H", (1,)) - BasisExpr.term("H", (2,))) * BasisExpr.term("H", (1,))
    assert x == BasisExpr.term("H", (1, 1)) - BasisExpr.term("H", (2, 1))


def test_multiply_unit():
    x = BasisExpr.term("H", (3, 1), -2)
    assert BasisExpr.unit("H") * x == x
    assert x * BasisExpr.unit("H") == x


def test_multiply_associative_random():
    # exhaustive checks are hopeless; random small expressions suffice
    rng = random.Random(11)

    def rand_expr():
        terms = {}
        for _ in range(rng.randint(1, 4)):
            ix = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 3)))
            terms[ix] = rng.randint(-3, 3)
        return BasisExpr("H", terms)

    for _ in range(50):
        a, b, c = rand_expr(), rand_expr(), rand_expr()
        assert (a * b) * c == a * (b * c)


def test_no_product_for_ribbon_basis():
    with pytest.raises(ValueError):
        BasisExpr.term("R", (1,)) * BasisExpr.term("R", (2,))


def test_h_sym_keys_resorted_on_multiply():
    x = BasisExpr.term("h_sym", (3, 1)) * BasisExpr.term("h_sym", (2,))
    assert x == BasisExpr.term("h_sym", (3, 2, 1))


def test_h_sym_rejects_non_partition_keys():
    with pytest.raises(ValueError):
        BasisExpr("h_sym", {(1, 2): 1})


def test_rejects_nonpositive_index_entries():
    with pytest.raises(ValueError):
        BasisExpr("H", {(1, 0): 1})


def test_json_roundtrip():
    x = BasisExpr("H", {(3, 1, 3): 1, (5, 2): -2, (): 4})
    data = json.loads(json.dumps(x.to_json_dict()))
    assert BasisExpr.from_json_dict(data) == x


def test_json_terms_sorted():
    x = BasisExpr("H", {(5, 2): 1, (3, 1, 3): 1})
    indices = [t["index"] for t in x.to_json_dict()["terms"]]
    assert indices == sorted(indices)


def test_text_rendering():
    x = BasisExpr("H", {(3, 1, 3): 1, (3, 2, 2): -1})
    assert x.to_text() == "H(3,1,3) - H(3,2,2)"


def test_text_zero_and_unit():
    assert BasisExpr.zero("H").to_text() == "0"
    assert BasisExpr.unit("H").to_text() == "1"


def test_latex_rendering():
    x = BasisExpr("R", {(2, 1): -1})
    assert x.to_latex() == "-R_{(2,1)}"
