import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from intervalspace.cli import main
from intervalspace.errors import InfeasibleSpec, ParseError, SizeBound, UnsupportedKind
from intervalspace.generators import KINDS, GenSpec, gen_random
from intervalspace.intervals import IntervalSeq, eps_separated, reduce
from intervalspace.oracle import oracle_reduce_bfs
from intervalspace.render import render
from intervalspace.scanning import PiecewiseLoop, alpha1
from intervalspace.suites import run_property_suite
from intervalspace.textio import format_element, parse


# -- generators --------------------------------------------------------------------------

@pytest.mark.parametrize("kind", KINDS)
def test_generation_is_deterministic(kind):
    spec = GenSpec(seed=11)
    assert [gen_random(spec, kind, i) for i in range(20)] == \
        [gen_random(spec, kind, i) for i in range(20)]


def test_tilde_output_is_valid():
    spec = GenSpec(seed=4)
    for i in range(50):
        e = gen_random(spec, "tildeI", i)
        assert all(eps_separated(xi, e.eps) for _, xi in e.config.items)


def test_zero_intervals_gives_empty():
    spec = GenSpec(max_intervals=0)
    assert gen_random(spec, "iclass").items == ()
    assert gen_random(spec, "mirror").items == ()


def test_infeasible_specs():
    with pytest.raises(InfeasibleSpec):
        GenSpec(eps_range=(F(0), F(1, 2)))
    spec = GenSpec(min_intervals=3, max_intervals=3, eps_range=(F(1), F(1)), span_range=(F(2), F(2)))
    with pytest.raises(InfeasibleSpec):
        gen_random(spec, "iclass")


# -- oracle --------------------------------------------------------------------------------

def test_oracle_examples():
    s = parse("S(0,4){ [1 2 + -] a ; [2 3 + +] a }")
    assert oracle_reduce_bfs(s) == {IntervalSeq(s.window, reduce(s).items)}
    r = parse("S(0,4){ [1 2 + +] a }")
    assert oracle_reduce_bfs(r) == {r}
    d = parse("S(0,4){ [1 2 + +] a ; [3 3 + -] b }")
    assert oracle_reduce_bfs(d) == {r}


def test_oracle_size_bound():
    s = parse("S(0,4){ [1/4 1/2 + -] a ; [1 2 + +] b ; [5/2 3 - -] a }")
    with pytest.raises(SizeBound):
        oracle_reduce_bfs(s, max_states=10)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 100_000))
def test_reduce_agrees_with_oracle(i):
    s = gen_random(GenSpec(seed=12, max_intervals=4), "sequence", i)
    assert oracle_reduce_bfs(s) == {IntervalSeq(s.window, reduce(s).items)}


# -- text format ---------------------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.sampled_from(KINDS), st.integers(0, 100_000))
def test_roundtrip(kind, i):
    x = gen_random(GenSpec(seed=13), kind, i)
    text = format_element(x)
    assert parse(text) == x and format_element(parse(text)) == text


@pytest.mark.parametrize("text", [
    "C{ [0] : +1 ; [1] : -1 }", "C{ [0,1] : (a,+1) }", "C<2>{ }", "I(-inf,inf){ [0 1 + -] a }",
    "E(3){ [0 1 + -] a }", "[1/2]^a", "*", "~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }",
])
def test_parse_print_fixed_points(text):
    assert format_element(parse(text)) == text


@pytest.mark.parametrize("text", [
    "I(0,3){ [1 2 + +] a ; [3/2 5/2 + +] a }", "I(0,3){ [1 2 + x] a }", "C{ [0] : +2 }",
    "~I[eps=3/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }", "C{ [0] : a } trailing",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_sequence_keeps_raw_items():
    s = parse("S(0,4){ [1 2 + -] a ; [2 3 + +] a }")
    assert len(s.items) == 2
    assert parse("I(0,4){ [1 2 + -] a ; [2 3 + +] a }").items == reduce(s).items


# -- rendering ------------------------------------------------------------------------------

def test_csv_of_scanned_loop():
    out = render(alpha1(parse("I(0,3){ [1 2 + +] a }"), F(1, 2)), "csv").decode()
    assert out.splitlines()[0] == "t,coord,label"
    assert "3/2,0,a" in out.splitlines()


def test_csv_constant_loop():
    rows = render(PiecewiseLoop.constant(0, 2), "csv", 4).decode().splitlines()[1:]
    assert rows and all(r.split(",")[1] == "*" for r in rows)


def test_svg_documents():
    for text in ("C<1>{ }", "E(3){ [0 1 + -] a }", "I(0,3){ [1 2 + +] a }"):
        doc = render(parse(text), "svg").decode()
        assert doc.startswith("<svg") and doc.rstrip().endswith("</svg>")
    assert render(parse("C<1>{ }"), "svg") == render(parse("C<1>{ }"), "svg")


def test_unsupported_render():
    with pytest.raises(UnsupportedKind):
        render(parse("I(0,3){ }"), "csv")
    with pytest.raises(UnsupportedKind):
        render(parse("*"), "svg")


# -- suites ---------------------------------------------------------------------------------

def test_empty_report():
    r = run_property_suite([])
    assert r.results == [] and r.passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_property_suite(["nope"])


def test_mutant_is_killed():
    r = run_property_suite(["mutant"], GenSpec(seed=1), trials=100)["mutant"]
    assert r.passed and "mutant killed" in r.notes[0]


def test_failing_suite_carries_replay_data():
    r = run_property_suite(["bigH-fiber"], GenSpec(seed=0), trials=40)["bigH-fiber"]
    assert not r.passed and r.seed == 0 and r.counterexample.startswith("~E[")
    parse(r.counterexample.split(" at t=")[0])


# -- cli ----------------------------------------------------------------------------------------

def run_cli(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_cli_normalize_and_sum(capsys):
    assert run_cli(capsys, "normalize", "S(0,4){ [1 2 + -] a ; [2 3 + +] a }") == \
        (0, "I(0,4){ [1 3 + +] a }\n")
    rc, out = run_cli(capsys, "sum", "C{ [0] : +1 }", "C{ [0] : -1 }")
    assert out == "C<1>{ }\n"


def test_cli_separated_scan_eval(capsys):
    assert run_cli(capsys, "separated", "--eps", "1/2", "I(0,3){ [1 2 + +] a }")[1] == "true\n"
    assert run_cli(capsys, "separated", "--eps", "3/2", "I(0,3){ [1 2 + +] a }")[1] == "false\n"
    out = run_cli(capsys, "scan", "--eps", "1/2", "I(0,3){ [1 2 + +] a }")[1]
    assert "3/2,0,a" in out.splitlines()
    assert run_cli(capsys, "eval", "--eps", "1/2", "--t", "1", "I(0,3){ [1 2 + +] a }")[1] == "[-1/2]^a\n"


def test_cli_project_homotopy(capsys):
    e = "~E[eps=1/2 s=3 d=1] C{ [0] : E(3){ [1/10 1 + +] a } }"
    assert run_cli(capsys, "project", e)[1] == "C{ [0] : [-2/5]^a }\n"
    rc, out = run_cli(capsys, "homotopy", "--name", "bigH", "--t", "1", e)
    assert rc == 0 and out == e + "\n"
    rc, out = run_cli(capsys, "homotopy", "--name", "bigH", "--audit", e)
    assert rc == 1 and "t=4/5 INVALID" in out and out.count(" ok") == 10
    rc, out = run_cli(capsys, "homotopy", "--name", "contract", "--t", "3/5", "E(1){ [1/2 4/5 - +] a }")
    assert out == "E(1){ [0 1/5 + +] a }\n"
    rc, out = run_cli(capsys, "homotopy", "--name", "k", "--t", "1", "--z", "C{ [0] : [1/2]^a }",
                      "~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }")
    assert out == "~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }\n"
    rc, out = run_cli(capsys, "homotopy", "--name", "deform", "--t", "1", "C{ [0] : [3/4]^a }")
    assert out == "C<1>{ }\n"


def test_cli_oracle_gen_check(capsys):
    assert run_cli(capsys, "oracle", "S(0,4){ [1 2 + -] a ; [2 3 + +] a }")[1] == \
        "S(0,4){ [1 3 + +] a }\n"
    a = run_cli(capsys, "gen", "--seed", "5", "--kind", "tildeE", "--count", "3")[1]
    assert a == run_cli(capsys, "gen", "--seed", "5", "--kind", "tildeE", "--count", "3")[1]
    rc, out = run_cli(capsys, "check", "--suite", "welding", "--trials", "20")
    assert rc == 0 and out.startswith("PASS welding")


def test_cli_errors(capsys):
    assert main(["normalize", "I(0,3){ [1 2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_render_file(tmp_path, capsys):
    path = tmp_path / "x.svg"
    assert main(["render", "--format", "svg", "-o", str(path), "E(3){ [0 1 + -] a }"]) == 0
    assert path.read_text().startswith("<svg")


def test_cli_subprocess_stdin():
    out = subprocess.run([sys.executable, "-m", "intervalspace", "normalize"],
                         input="S(0,4){ [1 2 + -] a ; [2 2 + -] a }\n", capture_output=True,
                         text=True, check=True).stdout
    assert out == "I(0,4){ [1 2 + -] a }\n"
