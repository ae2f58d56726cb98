import pytest

from rnoeth.constructions import REES_ZERO
from rnoeth.core import ConstructionError, Element
from rnoeth.specfile import SpecError, load_spec, parse_spec
from rnoeth.tableio import write_table
from rnoeth.core import cyclic_group, chain_semilattice


@pytest.fixture
def files(tmp_path):
    write_table(cyclic_group(2), tmp_path / "c2.tbl")
    write_table(chain_semilattice(2), tmp_path / "y.tbl")
    return tmp_path


def spec(dirpath, text, name="x.spec"):
    p = dirpath / name
    p.write_text(text)
    return p


def test_parse_sections_and_comments():
    sec, vals = parse_spec("# hi\n[brandt]\nS = c2.tbl  # group\nI = 2\n")
    assert sec == "brandt" and vals == {"S": "c2.tbl", "I": "2"}


@pytest.mark.parametrize("text", ["", "S = 1\n", "[nope]\n", "[rees]\n[rees]\n", "[rees]\nS\n",
                                  "[rees]\nS = a\nS = b\n"])
def test_parse_errors(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_brandt_over_group(files):
    B = load_spec(spec(files, "[brandt]\nS = c2.tbl\nI = 2\n"))
    assert B.order == 9 and REES_ZERO in B.labels


def test_rees_over_group_is_one_class(files):
    from rnoeth.green import r_poset
    R = load_spec(spec(files, "[rees]\nS = c2.tbl\nI = 1\nJ = 1\nP = e\n"))
    assert R.order == 2 and len(r_poset(R)) == 1


def test_rees_zero_and_matrix_rows(files):
    R = load_spec(spec(files, "[rees]\nS = c2.tbl\nI = 2\nJ = 2\nP = e g; g e\n"))
    assert R.info["P"].entry(2, 1) == 1
    with pytest.raises(ConstructionError):
        load_spec(spec(files, "[rees0]\nS = c2.tbl\nI = 1\nJ = 1\nP = e\n"))


def test_invalid_semidirect_names_the_law(files):
    with pytest.raises(ConstructionError) as exc:
        load_spec(spec(files, "[semidirect]\nS = c2.tbl\nT = c2.tbl\nphi.g = g e\n"))
    assert "composition" in str(exc.value) or "endomorphism" in str(exc.value)


def test_semidirect_with_constant_action(files):
    P = load_spec(spec(files, "[semidirect]\nS = y.tbl\nT = c2.tbl\nphi.e = identity\n"
                              "phi.g = identity\n"))
    assert P.order == 4


def test_witness_operands_give_symbolic_results(files):
    S = load_spec(spec(files, "[free-product]\nfactors = c2.tbl c2.tbl\nmonoid = yes\n"))
    assert not S.is_finite and S.identity is not None
    BR = load_spec(spec(files, "[bruck-reilly]\nM = c2.tbl\ntheta = constant e\n"))
    assert BR.identity == Element("bruck-reilly", (0, 0, 0))
    W = load_spec(spec(files, "[schutzenberger]\nS = W1\nT = W1\n"))
    assert not W.is_finite


def test_strong_semilattice_spec(files):
    S = load_spec(spec(files, "[strong-semilattice]\nY = y.tbl\ncomponent.0 = c2.tbl\n"
                              "component.1 = c2.tbl\nphi.1.0 = e e\n"))
    assert S.order == 4


def test_unknown_operand(files):
    with pytest.raises(SpecError):
        load_spec(spec(files, "[brandt]\nS = missing.tbl\nI = 1\n"))
    with pytest.raises(SpecError):
        load_spec(spec(files, "[brandt]\nS = c2.tbl\nI = 0\n"))
