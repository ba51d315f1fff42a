"""This module contains the routines for reading and writing lattice instance files.

An instance file is a single JSON document::

    {
      "p": 2,
      "dim": 4,
      "frame": [["1", "0", "0", "0"], ...],   (optional, identity)
      "weights": ["0", "0", "0", "0"],        (optional, zeros)
      "basis": [["1", "0", "0", "0"], ...],
      "target": ["1", "2", "0", "0"]          (optional)
    }

Rationals are always JSON strings "a" or "a/b" in lowest terms, never JSON
numbers.

Authors
-------
    - Mario Gennaro
    - Mees Fix

Use
---
    Routines in this module can be imported as follows:

    >>> from padic_lattice_tool.instance_parser import instanceFile
    >>> filename = "/path/to/instance.json"
    >>> instance = instanceFile(filename)
    >>> instance.lattice.norms()
"""

import json

from padic_lattice_tool.errors import InstanceParseError, InvalidParameterError
from padic_lattice_tool.lattice import latticeBasis
from padic_lattice_tool.norms import make_space
from padic_lattice_tool.padic_core import (
    check_prime,
    format_rational,
    identity_matrix,
    parse_rational,
)
from padic_lattice_tool.utils import sha256_digest

REQUIRED_KEYS = ("p", "dim", "basis")
OPTIONAL_KEYS = ("frame", "weights", "target")


def _position(text, offset):
    """1-based (line, column) of a character offset."""
    if offset < 0:
        return 0, 0
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class instanceFile:
    """Read, validate and write a lattice instance.

    Parameters
    ----------
    filename : str or pathlib.Path
        Instance file to read
    """

    def __init__(self, filename):
        self.filename = filename
        with open(filename, "rb") as file:
            raw = file.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as error:
            line = raw.count(b"\n", 0, error.start) + 1
            column = error.start - (raw.rfind(b"\n", 0, error.start) + 1) + 1
            raise InstanceParseError(
                f"INVALID UTF-8 BYTE 0x{raw[error.start]:02X} IN {filename}", line, column
            )
        self._load(text)

    @classmethod
    def from_text(cls, text, filename="<string>"):
        """Parse an instance from a JSON string."""
        instance = cls.__new__(cls)
        instance.filename = filename
        instance._load(text)
        return instance

    @classmethod
    def from_objects(cls, space, basis, target=None, filename=None):
        """Wrap an existing space and lattice basis (and target) as an instance."""
        instance = cls.__new__(cls)
        instance.filename = filename
        instance.text = None
        instance.space = space
        instance.lattice = basis
        instance.target = None if target is None else space.check_vector(target)
        return instance

    @property
    def p(self):
        return self.space.p

    @property
    def dim(self):
        return self.space.n

    def _error(self, message, token=None, after=0):
        """InstanceParseError located at the first occurrence of ``token``."""
        offset = -1 if token is None else self.text.find(token, after)
        line, column = _position(self.text, offset)
        return InstanceParseError(message, line, column)

    def _key_offset(self, key):
        return max(self.text.find(f'"{key}"'), 0)

    def _parse_rational(self, value, key):
        after = self._key_offset(key)
        if not isinstance(value, str):
            raise self._error(
                f"{key.upper()} ENTRY {value!r} MUST BE A STRING RATIONAL",
                json.dumps(value),
                after,
            )
        try:
            return parse_rational(value)
        except InvalidParameterError as error:
            raise self._error(str(error), f'"{value}"', after)

    def _parse_vector(self, value, key, length):
        if not isinstance(value, list) or len(value) != length:
            raise self._error(
                f"{key.upper()} MUST BE A LIST OF {length} RATIONALS", f'"{key}"'
            )
        return tuple(self._parse_rational(entry, key) for entry in value)

    def _parse_matrix(self, value, key, length, rows=None):
        if not isinstance(value, list) or not value or (rows is not None and len(value) != rows):
            expected = "A NON-EMPTY LIST" if rows is None else f"A LIST OF {rows}"
            raise self._error(f"{key.upper()} MUST BE {expected} OF ROWS", f'"{key}"')
        return tuple(self._parse_vector(row, key, length) for row in value)

    def _parse_integer(self, data, key):
        value = data[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise self._error(f"{key.upper()} MUST BE AN INTEGER", f'"{key}"')
        return value

    def _load(self, text):
        self.text = text
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise InstanceParseError(
                f"INVALID JSON: {error.msg}", error.lineno, error.colno
            )

        if not isinstance(data, dict):
            raise InstanceParseError("INSTANCE MUST BE A JSON OBJECT", 1, 1)

        for key in REQUIRED_KEYS:
            if key not in data:
                raise InstanceParseError(f"MISSING REQUIRED KEY {key!r}", 1, 1)
        for key in data:
            if key not in REQUIRED_KEYS + OPTIONAL_KEYS:
                raise self._error(f"UNKNOWN KEY {key!r}", f'"{key}"')

        p = self._parse_integer(data, "p")
        try:
            check_prime(p)
        except InvalidParameterError as error:
            raise self._error(str(error), '"p"')

        n = self._parse_integer(data, "dim")
        if n < 1:
            raise self._error("DIM MUST BE AT LEAST 1", '"dim"')

        if "frame" in data:
            frame = self._parse_matrix(data["frame"], "frame", n, rows=n)
        else:
            frame = identity_matrix(n)

        if "weights" in data:
            weights = self._parse_vector(data["weights"], "weights", n)
        else:
            weights = (parse_rational("0"),) * n

        basis = self._parse_matrix(data["basis"], "basis", n)
        if len(basis) > n:
            raise self._error(f"BASIS HAS {len(basis)} ROWS IN DIMENSION {n}", '"basis"')

        self.target = None
        if data.get("target") is not None:
            self.target = self._parse_vector(data["target"], "target", n)

        self.space = make_space(p, frame, weights)
        self.lattice = latticeBasis(self.space, basis)

    def to_dict(self):
        """Canonical dictionary form with string rationals."""
        data = {
            "p": self.p,
            "dim": self.dim,
            "frame": [[format_rational(x) for x in row] for row in self.space.frame],
            "weights": [format_rational(w) for w in self.space.weights],
            "basis": [[format_rational(x) for x in row] for row in self.lattice.vectors],
        }
        if self.target is not None:
            data["target"] = [format_rational(x) for x in self.target]
        return data

    def serialize(self):
        """Canonical UTF-8 text with LF line endings."""
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, filename):
        with open(filename, "w", encoding="utf-8", newline="\n") as file:
            file.write(self.serialize())
        self.filename = filename

    def digest(self):
        """SHA-256 of the canonical serialization."""
        return sha256_digest(self.serialize())
