"""
This module contains the plotting functions for the p-adic Lattice Tool.
Plotting output include:
    * Norm ladder staircase with the successive maxima of a lattice.

Authors
-------
    - Mario Gennaro
    - Mees Fix
"""

import pathlib

import matplotlib.pyplot as plt
import numpy as np

from padic_lattice_tool.utils import make_output_directory


def plot_invariants(
    report, output_directory=None, filename="invariants.png", fontsize=12, stream=None
):
    """Plot the norm ladder as a staircase of log_p norms with the successive maxima.

    Parameters
    ----------
    report : padic_lattice_tool.lattice.invariantReport
        Invariants to plot

    output_directory : str or pathlib.Path
        Directory to write the figure to, show the figure if None

    filename : str
        Name of the figure file

    fontsize : int
        Font size of the labels

    stream : file-like or None
        Where the status line goes, stdout if None

    Returns
    -------
    full_path : pathlib.Path or None
        Path of the written figure
    """
    p = report.maxima[0].p
    ladder = np.array([float(value.exponent) for value in report.ladder])
    maxima = np.array([float(value.exponent) for value in report.maxima])

    fig, ax = plt.subplots(figsize=(8, 5))
    ax.step(np.arange(1, len(ladder) + 1), ladder, where="mid", label="norm ladder")
    ax.scatter(
        np.arange(1, len(maxima) + 1), maxima, c="tab:red", zorder=3, label="successive maxima"
    )
    if report.escape is not None:
        ax.axhline(float(report.escape.exponent), c="tab:green", ls="--", label="escape distance")

    ax.set_xlabel("index", fontsize=fontsize)
    ax.set_ylabel(f"log_{p} norm", fontsize=fontsize)
    ax.legend(loc="upper right", fontsize=fontsize - 2)
    fig.tight_layout()

    full_path = None
    if output_directory:
        output_directory = pathlib.Path(output_directory)
        make_output_directory(output_directory)
        full_path = output_directory / filename
        print(f"WRITING FIGURE TO {full_path}", file=stream)
        plt.savefig(full_path)
    else:
        plt.show()

    plt.close(fig)
    return full_path
