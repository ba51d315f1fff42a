"""Utility functions for the p-adic Lattice Tool


Authors
-------
    - Mario Gennaro
    - Mees Fix
"""

import hashlib
import os
import pathlib
import warnings

from padic_lattice_tool.constants import ORACLE_BUDGET, ORACLE_BUDGET_ENV


def format_vector(vector):
    """Format a vector as comma separated rationals in brackets.

    Parameters
    ----------
    vector : sequence of fractions.Fraction
        Vector to format

    Returns
    -------
    text : str
        e.g. "[1, 0, -1/2, 0]"
    """
    return "[" + ", ".join(str(entry) for entry in vector) + "]"


def format_norms(norms):
    """Space separated norm values in "p^e" notation."""
    return " ".join(str(norm) for norm in norms)


def get_oracle_budget():
    """Number of coefficient tuples a brute force oracle may evaluate.

    The environment variable named by ``ORACLE_BUDGET_ENV`` overrides the
    default when it holds a positive integer.

    Returns
    -------
    budget : int
        Enumeration budget
    """
    value = os.environ.get(ORACLE_BUDGET_ENV)
    if value is None:
        return ORACLE_BUDGET

    try:
        budget = int(value)
    except ValueError:
        budget = 0

    if budget < 1:
        warnings.warn(
            f"{ORACLE_BUDGET_ENV}={value!r} IS NOT A POSITIVE INTEGER, "
            f"USING DEFAULT BUDGET {ORACLE_BUDGET}"
        )
        return ORACLE_BUDGET

    return budget


def sha256_digest(text):
    """Hex SHA-256 digest of a UTF-8 string."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def make_output_directory(directory_name):
    """Make output directories for figures and text files.

    Parameters
    ----------
    directory_name : str
        Path to create directory, if exists, code will not fail but not overwrite.
    """
    pathlib.Path(directory_name).mkdir(parents=True, exist_ok=True)
