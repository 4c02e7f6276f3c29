"""Plain-text formats for matrices, polynomial matrices, truncations and set families.

Matrix file::

    field 2^3
    modulus 1 1 0 1        # extension fields only
    rows 2
    cols 3
    labels a b c           # optional
    1 0;1 1;1;0
    0 1 0

A polynomial matrix adds ``degree_bound <n>`` and writes each entry as a
comma-separated coefficient list, constant term first (``0`` for the zero
polynomial).  A truncation adds ``method``, ``alpha`` (folded only) and
``source``/``source_modulus`` ahead of the polynomial matrix.

Family file: one set per line as space-separated element labels, optionally
followed by ``w=<weight>``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, UnknownElement
from .field import Element, Field, parse_field
from .fxmatrix import FMatrix, PolyMatrix
from .poly import Poly
from .repset import SetFamily
from .truncation import TruncationResult

HEADER_KEYS = {
    "field",
    "modulus",
    "rows",
    "cols",
    "degree_bound",
    "labels",
    "method",
    "alpha",
    "source",
    "source_modulus",
}


def _lines(text: str):
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _split(text: str):
    header, data = {}, []
    for line in _lines(text):
        key, _, rest = line.partition(" ")
        if not data and key in HEADER_KEYS:
            if key in header:
                raise ParseError(f"duplicate header line {key!r}")
            header[key] = rest.strip()
        else:
            data.append(line)
    return header, data


def _int(header, key):
    try:
        return int(header[key])
    except KeyError:
        raise ParseError(f"missing {key!r} line") from None
    except ValueError:
        raise ParseError(f"bad {key!r} value {header[key]!r}") from None


def _field(header, key="field", modkey="modulus", override: Field | None = None) -> Field:
    if override is not None:
        return override
    if key not in header:
        raise ParseError(f"missing {key!r} line")
    mod = header.get(modkey)
    return parse_field(header[key], mod.split() if mod else None)


def field_lines(F: Field, key="field", modkey="modulus") -> list:
    out = [f"{key} {F}"]
    if F.modulus is not None:
        out.append(f"{modkey} " + " ".join(str(c) for c in F.modulus))
    return out


def _labels(header, m):
    if "labels" not in header:
        return None
    labels = header["labels"].split()
    if len(labels) != m:
        raise ParseError(f"{len(labels)} labels for {m} columns")
    return labels


def _data_rows(data, n, m):
    if len(data) != n:
        raise ParseError(f"expected {n} data rows, found {len(data)}")
    rows = [line.split() for line in data]
    for i, r in enumerate(rows):
        if len(r) != m:
            raise ParseError(f"row {i + 1} has {len(r)} entries, expected {m}")
    return rows


# -- matrices ------------------------------------------------------------------


def format_matrix(M: FMatrix, labels=None) -> str:
    F = M.field
    out = field_lines(F) + [f"rows {M.nrows}", f"cols {M.ncols}"]
    if labels is not None:
        out.append("labels " + " ".join(labels))
    out += [" ".join(F.format(x) for x in r) for r in M.rows]
    return "\n".join(out) + "\n"


def parse_matrix(text: str, field: Field | None = None):
    """Returns ``(FMatrix, labels or None)``."""
    header, data = _split(text)
    F = _field(header, override=field)
    n, m = _int(header, "rows"), _int(header, "cols")
    rows = [[F.parse(t) for t in r] for r in _data_rows(data, n, m)]
    return FMatrix(F, rows, m, raw=True), _labels(header, m)


def format_poly(P: Poly) -> str:
    if P.is_zero():
        return "0"
    return ",".join(P.field.format(c) for c in P.coeffs)


def parse_poly(F: Field, text: str) -> Poly:
    return Poly(F, [F.parse(t) for t in text.split(",")], raw=True)


def format_polymatrix(M: PolyMatrix) -> str:
    out = field_lines(M.field) + [
        f"rows {M.nrows}",
        f"cols {M.ncols}",
        f"degree_bound {M.degree_bound}",
    ]
    out += [" ".join(format_poly(e) for e in r) for r in M.entries]
    return "\n".join(out) + "\n"


def _polymatrix_from(header, data, field=None) -> PolyMatrix:
    F = _field(header, override=field)
    n, m = _int(header, "rows"), _int(header, "cols")
    d = _int(header, "degree_bound")
    rows = [[parse_poly(F, t) for t in r] for r in _data_rows(data, n, m)]
    try:
        return PolyMatrix(F, rows, m, d)
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_polymatrix(text: str, field: Field | None = None) -> PolyMatrix:
    header, data = _split(text)
    return _polymatrix_from(header, data, field)


def is_polymatrix_text(text: str) -> bool:
    return "degree_bound" in _split(text)[0]


# -- truncations -----------------------------------------------------------------


def format_truncation(T: TruncationResult) -> str:
    out = [f"method {T.method}"]
    if T.alpha is not None:
        out.append(f"alpha {T.alpha}")
    out += field_lines(T.source_field, "source", "source_modulus")
    return "\n".join(out) + "\n" + format_polymatrix(T.matrix)


def parse_truncation(text: str) -> TruncationResult:
    header, data = _split(text)
    M = _polymatrix_from(header, data)
    method = header.get("method", "classical")
    if method not in ("classical", "folded"):
        raise ParseError(f"unknown method {method!r}")
    alpha = Element(M.field, M.field.parse(header["alpha"])) if "alpha" in header else None
    src = _field(header, "source", "source_modulus") if "source" in header else M.field
    return TruncationResult(M, method, alpha, src, M.field, M.nrows, M.degree_bound, M.ncols)


# -- families --------------------------------------------------------------------


def _weight(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return Fraction(text) if "/" in text else float(text)
        except ValueError:
            raise ParseError(f"bad weight {text!r}") from None


def parse_family(text: str, labels) -> SetFamily:
    index = {lab: i for i, lab in enumerate(labels)}
    sets, weights = [], []
    for line in _lines(text):
        toks = line.split()
        w = None
        if toks[-1].startswith("w="):
            w = _weight(toks.pop()[2:])
        try:
            sets.append(tuple(index[t] for t in toks))
        except KeyError as e:
            raise UnknownElement(f"unknown element label {e.args[0]!r}") from None
        weights.append(w)
    if any(w is not None for w in weights):
        weights = [1 if w is None else w for w in weights]
        return SetFamily(tuple(sets), tuple(weights))
    return SetFamily(tuple(sets))


def format_family(family: SetFamily, labels) -> str:
    out = []
    for i, S in enumerate(family.sets):
        line = " ".join(labels[e] for e in S)
        if family.weights is not None:
            line += f" w={family.weights[i]}"
        out.append(line)
    return "".join(line + "\n" for line in out)
