"""
Test cases for the command line.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import pandas as pd

from src.automata.document import deserialize
from src.main import build_parser, main


def test_parser_subcommands():
    """Test that every subcommand parses its required arguments."""
    parser = build_parser()
    args = parser.parse_args(["simulate", "--protocol", "elimination", "--M", "5"])
    assert (args.command, args.protocol, args.M) == ("simulate", "elimination", 5)
    args = parser.parse_args(["simulate", "--settle", "0"])
    assert args.settle == 0
    args = parser.parse_args(["sweep", "--figure", "m", "--out", "results", "--quick"])
    assert args.quick
    assert args.settle == 1_000_000
    args = parser.parse_args(["states", "--protocol", "aspiration", "--no-compile"])
    assert args.no_compile


def test_compile_and_demo(tmp_path, capsys):
    """Test compiling a PFA and running the demo on it."""
    document = tmp_path / "ete.json"
    assert main(["compile", "--protocol", "ete", "--arms", "2", "--N", "1",
                 "--out", str(document)]) == 0
    assert deserialize(document.read_text(encoding="utf-8")).num_states == 5

    table = tmp_path / "demo.csv"
    assert main(["demo-nonoptimal", "--pfa", str(document), "--means", "0.7,0.3",
                 "--horizons", "100,1000", "--exact", "--out", str(table)]) == 0
    out = capsys.readouterr().out
    assert "worst permutation: 2 1" in out
    assert len(pd.read_csv(table)) == 4


def test_demo_rejects_non_generic_bandit(tmp_path):
    """Test that a tie between arms is a validation error."""
    document = tmp_path / "constant.json"
    assert main(["compile", "--protocol", "constant", "--arms", "2", "--out", str(document)]) == 0
    assert main(["demo-nonoptimal", "--pfa", str(document), "--means", "0.5,0.5",
                 "--horizons", "100"]) == 2


def test_demo_rejects_malformed_document(tmp_path):
    """Test that a broken document is a validation error."""
    document = tmp_path / "broken.json"
    document.write_text('{"states": []}', encoding="utf-8")
    assert main(["demo-nonoptimal", "--pfa", str(document), "--means", "0.2,0.6",
                 "--horizons", "100"]) == 2


def test_states(capsys):
    """Test the state-count report."""
    assert main(["states", "--protocol", "thompson"]) == 0
    assert "infinite-state" in capsys.readouterr().out
    assert main(["states", "--protocol", "aspiration", "--no-compile"]) == 0
    assert "115000" in capsys.readouterr().out


def test_simulate(tmp_path, capsys):
    """Test a small simulation from flags."""
    out = tmp_path / "run"
    assert main(["simulate", "--protocol", "ete", "--means", "0.2,0.8", "--horizon", "50",
                 "--reps", "2", "--N", "2", "--out", str(out)]) == 0
    assert (out / "curve.csv").exists()
    assert (out / "summary.csv").exists()
    assert (out / "run.yaml").exists()
    output = capsys.readouterr().out
    assert "ete [N=2]" in output
    assert "settled past horizon 0/2" in output


def test_simulate_from_config(tmp_path):
    """Test a YAML config with a flag override."""
    config = tmp_path / "experiment.yaml"
    config.write_text("protocol: thompson\nmeans: [0.3, 0.5, 0.4]\nhorizon: 30\nreps: 2\n",
                      encoding="utf-8")
    out = tmp_path / "run"
    assert main(["simulate", "--config", str(config), "--seed", "9", "--out", str(out)]) == 0
    assert len(pd.read_csv(out / "curve.csv")) == 30


def test_simulate_errors(tmp_path):
    """Test validation and I/O failures."""
    assert main(["simulate", "--protocol", "thompson", "--m", "5", "--horizon", "10"]) == 2
    assert main(["simulate", "--horizon", "0"]) == 2
    assert main(["simulate", "--config", str(tmp_path / "missing.yaml")]) == 1


def test_plot(tmp_path):
    """Test plotting a curve written by a simulation."""
    out = tmp_path / "run"
    assert main(["simulate", "--protocol", "ete", "--means", "0.2,0.8", "--horizon", "20",
                 "--reps", "2", "--N", "1", "--out", str(out)]) == 0
    figure = tmp_path / "figure.svg"
    assert main(["plot", str(out / "curve.csv"), "--out", str(figure), "--labels", "ete"]) == 0
    assert figure.exists()
    assert main(["plot", str(out / "curve.csv"), "--out", str(figure), "--labels", "a,b"]) == 2
