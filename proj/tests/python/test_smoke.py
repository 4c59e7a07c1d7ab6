"""Smoke tests for the python extension module."""
import pytest

gja = pytest.importorskip("_gja")


def test_version():
    assert gja.__version__ == "0.1.0"


def test_evaluate_goldens():
    assert gja.evaluate("cbcb") == {"a": "-1"}
    assert gja.evaluate_str("(a*b)*c") == "-d"
    assert gja.evaluate_str("a*(b*c)") == "c"
    assert gja.evaluate("{b,d}") == {}


def test_contract_and_normalize():
    assert gja.contract("bdbd") == {"a": "1"}
    assert gja.normalize("cbcb") == "-ccbb"


def test_bracket():
    assert gja.bracket("d", "a") == {"c": "-1", "d": "1"}
    with pytest.raises(RuntimeError):
        gja.bracket("a + c", "d")


def test_jacobi_modes():
    fito = gja.jacobi("fito")
    assert len(fito) == 8
    assert all(value == {} for _, value in fito)
    foti = gja.jacobi("foti")
    assert any(value for _, value in foti)
    assert gja.jacobi_commutator_variant() == {"a": "-4"}


def test_classify_and_signature():
    assert gja.classify("A") == "neither"
    assert gja.classify("H") == "associative"
    assert gja.signature("A") == "(+,-,+,-)"
    assert gja.signature("H") == "(+,-,-,-)"


def test_parse_error_maps_to_value_error():
    with pytest.raises(ValueError):
        gja.evaluate("a*b*c")


def test_verify_all():
    ok, report = gja.verify("all")
    assert ok
    assert '"version": "0.1.0"' in report
    assert set(gja.suites()) == {
        "table", "words", "brackets", "jacobi", "axioms", "quaternion", "compare",
    }
