import json
import math
import subprocess
import sys

import numpy as np
import pytest

from ldhelix import cli
from ldhelix.curve import delta_sequence, sample_curve
from ldhelix.riccati import HelixParams

DELTA0 = delta_sequence(0)[0]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_defaults(capsys):
    code, out, _ = run(capsys, "generate")
    assert code == 0
    cols, vals = cli.read_csv(out)
    assert cols == list(cli.COLUMNS)
    assert out.splitlines()[0] == "s,x_re,y_re,z_re,x_im,y_im,z_im"
    assert vals.shape == (1000, 7)
    zero = vals[vals[:, 0] == 0.0]
    assert len(zero) == 1 and np.all(zero == 0.0)
    assert vals[0, 0] == -math.sqrt(50) and vals[-1, 0] < math.sqrt(50)


def test_generate_round_trip_bit_exact(capsys):
    _, out, _ = run(capsys, "generate", "--k", "-1.3", "--c", "0.7", "--samples", "257")
    _, vals = cli.read_csv(out)
    curve = sample_curve(1, HelixParams(-1.3, 0.7, 0), -math.sqrt(50), math.sqrt(50), 257, endpoint=False)
    ref = np.column_stack([curve.s, curve.real, curve.imag])
    assert np.array_equal(vals, ref)
    assert vals.tobytes() == ref.tobytes()


def test_number_formatting_round_trips():
    rng = np.random.default_rng(3)
    for v in np.concatenate([rng.normal(size=1000) * 10.0 ** rng.integers(-300, 300, 1000), [5e-324, 1.7976931348623157e308]]):
        assert float(cli.fmt(v)) == v


def test_parts_filter_columns(capsys):
    _, out, _ = run(capsys, "generate", "--part", "real", "--samples", "4")
    assert out.splitlines()[0] == "s,x_re,y_re,z_re"
    _, out, _ = run(capsys, "generate", "--part", "imag", "--samples", "4")
    assert out.splitlines()[0] == "s,x_im,y_im,z_im"


def test_json_output(capsys):
    code, out, _ = run(capsys, "generate", "--format", "json", "--samples", "10", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"] == {"k": 2.0, "c": 1.0, "delta": 0.0}
    assert doc["case"] == 1 and doc["columns"] == list(cli.COLUMNS)
    samples = np.array(doc["samples"])
    assert samples.shape == (10, 7)
    _, csv_out, _ = run(capsys, "generate", "--samples", "10", "--k", "2")
    assert np.array_equal(samples, cli.read_csv(csv_out)[1])


def test_fig2_range(capsys):
    code, out, _ = run(capsys, "generate", "--case", "2", "--k", "2", "--s-max", "sqrt(125)")
    assert code == 0
    _, vals = cli.read_csv(out)
    assert vals[0, 0] == -math.sqrt(125) and vals.shape == (1000, 7)
    assert np.allclose(vals[:, 3], -vals[:, 0] / math.sqrt(5), atol=1e-14)


def test_delta_z_column(capsys):
    code, out, _ = run(capsys, "generate", "--delta", "delta0", "--samples", "200")
    assert code == 0
    _, vals = cli.read_csv(out)
    assert np.allclose(vals[:, 3], vals[:, 0] / math.sqrt(2), rtol=0, atol=1e-14)
    _, out, _ = run(capsys, "generate", "--delta", "delta0", "--samples", "200", "--rezero")
    _, vals = cli.read_csv(out)
    assert np.all(vals[vals[:, 0] == 0.0] == 0.0)


def test_output_file_and_figure(tmp_path, capsys):
    csv_path, png = tmp_path / "c.csv", tmp_path / "c.png"
    code, out, _ = run(capsys, "generate", "--samples", "50", "-o", str(csv_path), "--figure", str(png))
    assert code == 0 and out == ""
    assert len(csv_path.read_text().splitlines()) == 51
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_foci_output(capsys):
    code, out, _ = run(capsys, "foci", "--case", "1", "--k", "1", "--c", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "limit,x,y"
    x, y = map(float, lines[1].split(",")[1:])
    assert x == pytest.approx(0.74522, abs=1e-5) and y == -x
    assert lines[-1] == "# second bisectrix"
    _, out, _ = run(capsys, "foci", "--case", "1", "--delta", "delta0")
    x, y = map(float, out.splitlines()[1].split(",")[1:])
    assert abs(abs(x) - abs(y)) < 1e-12
    assert out.splitlines()[-1] in ("# first bisectrix", "# second bisectrix")


def test_delta_seq_output(capsys):
    code, out, _ = run(capsys, "delta-seq", "--n-max", "3", "--c", "1")
    assert code == 0
    vals = [float(ln.split(",")[1]) for ln in out.splitlines()[1:]]
    ref = [2 ** 0.25 * math.sqrt((2 * n + 1) * math.pi / 2) for n in range(4)]
    assert vals == pytest.approx(ref, rel=1e-15)


@pytest.mark.parametrize("argv", [
    ["generate", "--k", "0"],
    ["generate", "--c", "-1"],
    ["generate", "--k", "2", "--delta", "0.5"],
    ["generate", "--case", "3", "--delta", "delta0"],
    ["generate", "--s-min", "1", "--s-max", "1"],
    ["generate", "--samples", "1"],
    ["foci", "--case", "3"],
    ["delta-seq", "--n-max", "-1"],
])
def test_invalid_arguments_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert capsys.readouterr().err.strip()


def test_bad_expression_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate", "--k", "__import__('os')"])
    assert exc.value.code == 2
    assert cli.number("-delta0/2") == -DELTA0 / 2
    assert cli.number("2**0.5") == math.sqrt(2)


@pytest.mark.parametrize("suite", ["fresnel", "tangent", "curve", "frenet"])
def test_verify_passing_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite)
    assert code == 0, out
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_riccati_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "riccati")
    assert code == 1
    assert "PASS  riccati/residual_negated_coefficients" in out
    assert "FAIL  riccati/residual_printed_equation" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ldhelix", "delta-seq", "--n-max", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["n,delta_n", f"0,{cli.fmt(DELTA0)}"]
