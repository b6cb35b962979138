# SPDX-License-Identifier: Apache-2.0
import pytest

nestlp = pytest.importorskip("nestlp")

EXAMPLE = "p. q. r v (p, q)."


def test_parse_and_print():
    p = nestlp.parse(EXAMPLE)
    assert len(p) == 3
    assert p.alphabet == ["p", "q", "r"]
    assert p.classify() == "nnf"
    assert str(p) == "p.\nq.\nr | p, q.\n"
    assert nestlp.parse(str(p)) == p


def test_answer_sets():
    p = nestlp.parse(EXAMPLE)
    assert nestlp.answer_sets(p) == [frozenset({"p", "q"})]
    assert nestlp.equilibrium_models(p) == nestlp.answer_sets(p)
    assert nestlp.answer_sets(nestlp.parse(""), alphabet=["z"]) == [frozenset()]


def test_translate_structural():
    out, report = nestlp.translate(nestlp.parse(EXAMPLE))
    assert out.classify() in ("basic", "disjunctive")
    assert report["mode"] == "structural"
    assert report["rules_in"] == 3
    assert report["rules_out"] == len(out)
    dlv = out.to_dlv()
    again = nestlp.parse(dlv, allow_reserved=True)
    projected = {s & {"p", "q", "r"} for s in nestlp.answer_sets(again, cap=64)}
    assert projected == {frozenset({"p", "q"})}


def test_polarity_variant_is_caught():
    v = nestlp.check_faithful(nestlp.parse(EXAMPLE), mode="polarity")
    assert not v["equal"]
    assert v["witness"] == frozenset({"p", "q", "r"})
    assert nestlp.check_faithful(nestlp.parse(EXAMPLE))["equal"]


def test_modular_and_context():
    a = nestlp.parse("p :- not q.")
    b = nestlp.parse("q :- not p.")
    assert nestlp.check_modular(a, b)
    v = nestlp.check_faithful_in_context(nestlp.parse("r v (p, q)."), nestlp.parse("p. q."))
    assert v["equal"]


def test_generator_and_growth():
    g1 = nestlp.generate_program(seed=3)
    assert g1 == nestlp.generate_program(seed=3)
    rows = nestlp.measure_growth("dnf_head", 1, 5)
    assert [r["distributive_rules"] for r in rows] == [2, 4, 8, 16, 32]
    assert nestlp.growth_csv("dnf_head", 2).startswith("n,structural_size,distributive_size,distributive_overflow\n")


def test_errors():
    with pytest.raises(nestlp.SyntaxError):
        nestlp.parse("p :- .")
    with pytest.raises(nestlp.SyntaxError):
        nestlp.parse("n_p.")
    with pytest.raises(nestlp.PreconditionError):
        nestlp.parse(EXAMPLE).to_dlv()
    with pytest.raises(nestlp.ResourceError):
        nestlp.answer_sets(nestlp.parse(""), alphabet=[f"a{i}" for i in range(30)])
    with pytest.raises(ValueError):
        nestlp.translate(nestlp.parse(EXAMPLE), mode="fast")
