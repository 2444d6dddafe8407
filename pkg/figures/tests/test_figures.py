"""Each figure script renders the shipped example CSVs to a nonempty image."""

import os

import pandas as pd
import pytest

import figlib
import fig1
import fig2
import fig3
import fig4
import fig5
import fig6
import fig7

EXAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                        "examples")
SCRIPTS = [fig1, fig2, fig3, fig4, fig5, fig6, fig7]


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda m: m.__name__)
def test_renders_nonempty_images(script, tmp_path):
    out = tmp_path / script.__name__
    assert script.main([EXAMPLES, str(out)]) == 0
    for ext in (".png", ".svg"):
        path = str(out) + ext
        assert os.path.exists(path)
        assert os.path.getsize(path) > 0


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda m: m.__name__)
def test_missing_input_dir_reports_error(script, tmp_path, capsys):
    assert script.main([str(tmp_path / "nowhere"), str(tmp_path / "o")]) == 1
    assert "missing input file" in capsys.readouterr().err


def test_usage_error():
    assert fig1.main(["only-one-arg"]) == 2


def test_empty_csv_reports_no_rows(tmp_path):
    (tmp_path / "ser.csv").write_text(
        "snr_db,detector,errors,symbols,ser,diverged_trials\n")
    with pytest.raises(figlib.FigureInputError, match="no data rows"):
        fig7.render(str(tmp_path))


def test_missing_column_named(tmp_path):
    (tmp_path / "rate_bounds.csv").write_text("T,U_T\n1,0.5\n")
    with pytest.raises(figlib.FigureInputError, match="rho"):
        fig5.render(str(tmp_path))


def test_fig7_one_curve_per_detector():
    df = pd.read_csv(os.path.join(EXAMPLES, "ser.csv"))
    detectors = list(df["detector"].unique())
    fig = fig7.render(EXAMPLES)
    labels = [line.get_label() for line in fig.axes[0].get_lines()]
    assert sorted(labels) == sorted(detectors)
    for line in fig.axes[0].get_lines():
        assert len(line.get_xdata()) == df["snr_db"].nunique()


def test_fig2_has_snapshot_series_in_both_panels():
    fig = fig2.render(EXAMPLES)
    assert len(fig.axes) == 2
    for ax in fig.axes:
        # the source plus at least one snapshot per panel
        assert len(ax.get_lines()) >= 2
