import pytest
from hypothesis import given, settings

from strategies import semigroups
from rnoeth.core import MalformedTable, NotAssociative, null_semigroup
from rnoeth.tableio import format_table, parse_table, read_table, write_table


def test_parse_with_comments_and_names():
    S = parse_table("# null semigroup\nsgp-table 1\n2\n\n0 0\n0 0\nname 1 a\n")
    assert S.table == ((0, 0), (0, 0)) and S.names == ["0", "a"]


def test_crlf_is_accepted():
    assert parse_table("sgp-table 1\r\n1\r\n0\r\n").order == 1


@pytest.mark.parametrize("text", [
    "",
    "sgp-table 2\n1\n0\n",
    "sgp-table 1\nx\n",
    "sgp-table 1\n2\n0 0\n",
    "sgp-table 1\n2\n0 0\n0 2\n",
    "sgp-table 1\n2\n0 0 0\n0 0\n",
    "sgp-table 1\n1\n0\nname 3 z\n",
    "sgp-table 1\n1\n0\nbogus\n",
])
def test_malformed_files(text):
    with pytest.raises(MalformedTable):
        parse_table(text)


def test_nonassociative_file():
    with pytest.raises(NotAssociative) as exc:
        parse_table("sgp-table 1\n2\n1 0\n0 0\n")
    assert len(exc.value.triple) == 3


def test_format_is_bit_exact():
    assert format_table(null_semigroup(2)) == "sgp-table 1\n2\n0 0\n0 0\nname 1 a\n"


def test_write_uses_lf(tmp_path):
    p = tmp_path / "n.tbl"
    write_table(null_semigroup(2), p)
    assert b"\r" not in p.read_bytes()
    assert read_table(p).table == null_semigroup(2).table


@settings(max_examples=40, deadline=None)
@given(semigroups(4))
def test_round_trip(S):
    T = parse_table(format_table(S))
    assert T.table == S.table
    assert format_table(T) == format_table(S)
