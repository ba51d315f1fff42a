"""Constants used in the p-adic Lattice Tool

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    Constants in this module can be imported as follows:

    >>> from padic_lattice_tool.constants import (
            DEFAULT_LADDER_LENGTH,
            ORACLE_BUDGET,
            ORACLE_BUDGET_ENV,
            PROJECT_DIRNAME,
        )
"""

import os

PROJECT_DIRNAME = os.path.dirname(__file__)
DATA_DIRNAME = os.path.join(PROJECT_DIRNAME, "data")

# Bundled example instances (the Q_2(zeta_5) lattice and the Z_2 toy lattice).
ZETA5_EXAMPLE_FILE = os.path.join(DATA_DIRNAME, "zeta5_lattice.json")
ZETA5_REORDERED_FILE = os.path.join(DATA_DIRNAME, "zeta5_lattice_reordered.json")
ZETA5_CVP_STEP_FILE = os.path.join(DATA_DIRNAME, "zeta5_cvp_step.json")
ESCAPE_EXAMPLE_FILE = os.path.join(DATA_DIRNAME, "z2_escape.json")

# Brute force oracles: maximum number of coefficient tuples evaluated per call.
ORACLE_BUDGET = 10**7
ORACLE_BUDGET_ENV = "PADIC_LATTICE_ORACLE_BUDGET"
ORACLE_START_DEPTH = 2
ENUMERATION_CHUNK = 2**15

DEFAULT_LADDER_LENGTH = 5
DEFAULT_CHECK_COUNT = 20
CHECK_PRIMES = (2, 3, 5)
CHECK_MAX_DIMENSION = 3
CHECK_VALUATION_RANGE = (-1, 2)

WEIGHT_SPECS = ("zero", "integer", "half")
WEIGHT_RANGE = (-2, 2)

GROUND_TRUTH_SUFFIX = ".truth.json"

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION_ERROR = 3
EXIT_VERIFICATION_ERROR = 4
