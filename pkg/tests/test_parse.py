import pytest

from wzslab.errors import OrderCapExceeded, ParseError
from wzslab.group_module import WeightKind, make_group
from wzslab.parse_module import parse_discriminant, parse_group_spec, parse_sequence, parse_weight_spec

@pytest.mark.parametrize("text, factors", [
    ("3", (3,)),
    ("2,4", (2, 4)),
    ("C2+C4", (2, 4)),
    (" 6 ", (6,)),
    ("", ()),
    ("1", ()),
])
def test_group_specs(text, factors):
    assert parse_group_spec(text).invariant_factors == factors

@pytest.mark.parametrize("text", ["abc", "2,,4", "C2+", "0"])
def test_bad_group_specs(text):
    with pytest.raises(ParseError):
        parse_group_spec(text)

def test_group_spec_cap():
    with pytest.raises(OrderCapExceeded):
        parse_group_spec("8,8", cap=32)

def test_weight_specs():
    G = make_group([5])
    assert parse_weight_spec(G, "PM").kind is WeightKind.PLUS_MINUS
    assert len(parse_weight_spec(G, "aut")) == 4
    with pytest.raises(ParseError):
        parse_weight_spec(G, "all")

def test_sequence_literals():
    G = make_group([5])
    S = parse_sequence(G, "[(1)^5, (4)^5]")
    assert S.serialize() == "[(1)^5,(4)^5]"
    assert parse_sequence(G, "[(6),(1)]").serialize() == "[(1)^2]"
    assert parse_sequence(G, "[]").is_empty()

def test_sequence_literals_rank_two():
    G = make_group([2, 4])
    S = parse_sequence(G, "[(0,1),(1,3)^2]")
    assert len(S) == 3
    assert S.count(G.element((1, 3))) == 2

@pytest.mark.parametrize("text, column", [
    ("[(1),(2)", 9),
    ("(1)", 1),
    ("[(1)^-2]", 6),
    ("[(1)] x", 7),
])
def test_sequence_errors_carry_position(text, column):
    with pytest.raises(ParseError) as info:
        parse_sequence(make_group([5]), text)
    assert info.value.column == column
    assert info.value.line == 1

def test_sequence_wrong_arity():
    with pytest.raises(ParseError):
        parse_sequence(make_group([2, 4]), "[(1)]")

def test_discriminant():
    assert parse_discriminant(" -23 ") == -23
    with pytest.raises(ParseError):
        parse_discriminant("minus 23")
