"""Plain-text tensor files.

The format is line oriented and byte deterministic::

    ct-tensor 1
    dims 3 2 2
    field real
    slice 0
    1 2.5
    -3 0
    1e-10 4
    slice 1
    ...

``#`` starts a comment that runs to the end of the line; blank lines are
ignored.  Complex files use ``field complex`` and write every entry as
``(re,im)`` with no interior spaces.  Slices with an empty face
(n1 * n2 == 0) carry no row lines.  Numbers are written with ``repr``
so that parsing a written file reproduces the tensor bit for bit.
"""

from __future__ import annotations

import numpy as np

from .errors import DimsMismatch, ParseError
from .tensor import Tensor3

__all__ = ["format_float", "parse_tensor_file", "write_tensor_file"]


def format_float(x: float) -> str:
    """Shortest decimal string that parses back to exactly x."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def _parse_real(tok: str, ln: int) -> complex:
    try:
        return complex(float(tok), 0.0)
    except ValueError:
        raise ParseError(ln, f"invalid real entry {tok!r}") from None


def _parse_complex(tok: str, ln: int) -> complex:
    if not (tok.startswith("(") and tok.endswith(")")):
        raise ParseError(ln, f"invalid complex entry {tok!r}, expected '(re,im)'")
    parts = tok[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError(ln, f"invalid complex entry {tok!r}, expected '(re,im)'")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise ParseError(ln, f"invalid complex entry {tok!r}") from None


def parse_tensor_file(data: bytes | str) -> Tensor3:
    """Parse the text tensor format.

    Raises ParseError (with the offending line number) for malformed
    content and DimsMismatch when the payload does not match the declared
    dimensions.
    """
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    lines: list[tuple[int, str]] = []
    total = 0
    for ln, raw in enumerate(text.splitlines(), start=1):
        total = ln
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((ln, body))
    pos = 0

    def header_line(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(total + 1, f"unexpected end of file, expected {what}")
        item = lines[pos]
        pos += 1
        return item

    def payload_line(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise DimsMismatch(f"file ended before {what}")
        item = lines[pos]
        pos += 1
        return item

    ln, body = header_line("the 'ct-tensor 1' header")
    if body.split() != ["ct-tensor", "1"]:
        raise ParseError(ln, "expected header 'ct-tensor 1'")

    ln, body = header_line("the dims line")
    parts = body.split()
    if len(parts) != 4 or parts[0] != "dims":
        raise ParseError(ln, "expected 'dims n1 n2 n3'")
    try:
        n1, n2, n3 = (int(p) for p in parts[1:])
    except ValueError:
        raise ParseError(ln, "dims must be integers") from None
    if n1 < 0 or n2 < 0 or n3 < 1:
        raise ParseError(ln, f"dims {n1} {n2} {n3} out of range (need n1, n2 >= 0 and n3 >= 1)")

    ln, body = header_line("the field line")
    parts = body.split()
    if len(parts) != 2 or parts[0] != "field" or parts[1] not in ("real", "complex"):
        raise ParseError(ln, "expected 'field real' or 'field complex'")
    parse_entry = _parse_real if parts[1] == "real" else _parse_complex

    slices = np.zeros((n3, n1, n2), dtype=np.complex128)
    rows = n1 if n1 * n2 > 0 else 0
    for k in range(n3):
        ln, body = payload_line(f"the 'slice {k}' marker")
        if body.split() != ["slice", str(k)]:
            raise ParseError(ln, f"expected 'slice {k}'")
        for i in range(rows):
            ln, body = payload_line(f"row {i} of slice {k}")
            if body.split() == ["slice", str(k + 1)]:
                raise DimsMismatch(f"slice {k} has {i} rows, expected {n1}")
            toks = body.split()
            if len(toks) != n2:
                raise DimsMismatch(f"row {i} of slice {k} has {len(toks)} entries, expected {n2}")
            slices[k, i] = [parse_entry(t, ln) for t in toks]
    if pos < len(lines):
        raise ParseError(lines[pos][0], "unexpected content after the last slice")
    return Tensor3(slices)


def write_tensor_file(A: Tensor3, field: str | None = None) -> bytes:
    """Serialize a tensor; bit-exact under parse_tensor_file.

    The field defaults to "real" when every entry has zero imaginary part
    and to "complex" otherwise; passing field="real" for a tensor with
    nonzero imaginary parts is an error.
    """
    sl = A.slices
    if field is None:
        field = "complex" if np.any(sl.imag != 0.0) else "real"
    if field not in ("real", "complex"):
        raise ValueError(f"field must be 'real' or 'complex', got {field!r}")
    if field == "real" and np.any(sl.imag != 0.0):
        raise ValueError("cannot write a tensor with nonzero imaginary parts as field real")
    out = ["ct-tensor 1", f"dims {A.n1} {A.n2} {A.n3}", f"field {field}"]
    for k in range(A.n3):
        out.append(f"slice {k}")
        if A.n1 * A.n2 == 0:
            continue
        for i in range(A.n1):
            if field == "real":
                row = " ".join(format_float(v) for v in sl[k, i].real)
            else:
                row = " ".join(
                    f"({format_float(v.real)},{format_float(v.imag)})" for v in sl[k, i]
                )
            out.append(row)
    return ("\n".join(out) + "\n").encode("ascii")
