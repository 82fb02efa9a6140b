"""Line-oriented text format for codes over GF(4).

::

    # comments and blank lines are ignored
    field gf4
    length 4
    kind linear
    1 0 W w
    0 1 w W

Rows use the symbols 0 1 w W (w = omega, W = omega^2).
"""

from __future__ import annotations

from pathlib import Path

from skewaqc import gf4
from skewaqc.codes import AdditiveCodeF4, Code, LinearCodeF4, repetition_code


class CodeFileError(ValueError):
    """Malformed code file; the message names the offending line."""


def parse_code(text: str) -> Code:
    header: dict[str, str] = {}
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key in ("field", "length", "kind") and not rows:
            if key in header:
                raise CodeFileError(f"line {lineno}: duplicate header {key!r}")
            header[key] = rest.strip()
            continue
        try:
            rows.append(gf4.parse_vector(line))
        except ValueError as exc:
            raise CodeFileError(f"line {lineno}: {exc}") from None
        if "length" in header and len(rows[-1]) != _length(header):
            raise CodeFileError(
                f"line {lineno}: row has {len(rows[-1])} entries, expected {_length(header)}"
            )
    for key in ("field", "length", "kind"):
        if key not in header:
            raise CodeFileError(f"missing header line {key!r}")
    if header["field"].lower() != "gf4":
        raise CodeFileError(f"unsupported field {header['field']!r}")
    n = _length(header)
    kind = header["kind"].lower()
    if kind == "linear":
        try:
            return LinearCodeF4(n, rows)
        except ValueError as exc:
            raise CodeFileError(str(exc)) from None
    if kind == "additive":
        # dependent rows are allowed; the span is canonicalised
        return AdditiveCodeF4(n, rows)
    raise CodeFileError(f"kind must be 'linear' or 'additive', got {kind!r}")


def _length(header: dict[str, str]) -> int:
    try:
        n = int(header["length"])
    except ValueError:
        raise CodeFileError(f"length must be an integer, got {header['length']!r}") from None
    if n < 1:
        raise CodeFileError(f"length must be positive, got {n}")
    return n


def format_code(code: Code) -> str:
    kind = "linear" if isinstance(code, LinearCodeF4) else "additive"
    lines = ["field gf4", f"length {code.n}", f"kind {kind}"]
    lines += [gf4.format_vector(row) for row in code.generators]
    return "\n".join(lines) + "\n"


# named fixtures accepted wherever a code file is expected
EQN4_ROWS = ("1 0 W w", "0 1 w W")
EQN7_ROWS = ("1 1 0 1 0 0 0", "0 1 1 0 1 0 0", "0 0 1 1 0 1 0", "0 0 0 1 1 0 1")


def eqn4_code() -> LinearCodeF4:
    """The [4,2,3] skew-cyclic code used in the worked examples."""
    return LinearCodeF4(4, [gf4.parse_vector(r) for r in EQN4_ROWS])


def eqn7_code() -> LinearCodeF4:
    """The [7,4,3] skew-cyclic code used in the worked examples."""
    return LinearCodeF4(7, [gf4.parse_vector(r) for r in EQN7_ROWS])


def load_code(spec: str) -> Code:
    """A file path, or one of the names ``rep<n>``, ``eqn4``, ``eqn7``."""
    name = spec.strip().lower()
    if name == "eqn4":
        return eqn4_code()
    if name == "eqn7":
        return eqn7_code()
    if name.startswith("rep") and name[3:].isdigit() and not Path(spec).exists():
        return repetition_code(int(name[3:]))
    return parse_code(Path(spec).read_text())
