"""Figure rendering for the report path.

The canonical figure artifacts are the CSV series the report writes; the PNGs
here are the same data drawn with matplotlib for quick inspection: the
monthly and daily volatility paths and the eigenvalue scree plot.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.dates as mdates  # noqa: E402
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .run import ReportBundle  # noqa: E402


def _plot_series(dates, values, title, ylabel, path):
    fig, ax = plt.subplots(figsize=(9, 3.2))
    x = np.asarray(dates, dtype="datetime64[D]").astype("datetime64[ms]")
    ax.plot(x, values, linewidth=0.8, color="#1f4e79")
    ax.set_title(title)
    ax.set_ylabel(ylabel)
    ax.xaxis.set_major_formatter(mdates.DateFormatter("%Y-%m"))
    ax.margins(x=0.01)
    fig.autofmt_xdate()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _plot_scree(eigenvalues, path):
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    idx = np.arange(1, len(eigenvalues) + 1)
    ax.plot(idx, eigenvalues, marker="o", color="#1f4e79")
    ax.axhline(1.0, linestyle="--", linewidth=0.8, color="#888888")
    ax.set_xlabel("Component")
    ax.set_ylabel("Eigenvalue")
    ax.set_title("Scree plot")
    ax.set_xticks(idx)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_figures(bundle: ReportBundle, out_dir) -> list:
    """PNG renderings of the volatility series and the scree data."""
    os.makedirs(out_dir, exist_ok=True)
    written = []

    vol = bundle.stages.get("volatility")
    if vol is not None and vol.status == "ok":
        monthly = vol.payload["monthly"]
        path = os.path.join(out_dir, "volatility_monthly.png")
        _plot_series(monthly["dates"], monthly["values"],
                     "Monthly stock market volatility", "volatility", path)
        written.append(path)
        daily = vol.payload["daily"]
        path = os.path.join(out_dir, "volatility_daily.png")
        _plot_series(daily["dates"], daily["values"],
                     "Daily stock market volatility", "volatility", path)
        written.append(path)

    pca = bundle.stages.get("pca")
    if pca is not None and pca.status == "ok":
        path = os.path.join(out_dir, "scree.png")
        _plot_scree(pca.payload["eigenvalues"], path)
        written.append(path)
    return written
