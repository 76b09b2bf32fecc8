"""Structured output documents and their renderers.

Every CLI command produces one OutputDocument; rendering is a pure
function of the document, so identical invocations are byte-identical.
All rational values cross the wire as strings "p/q" (reduced, q > 0) or
"p" when integral; see :func:`goldencalc.rationals.format_rational`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .polynomials import Polynomial

FORMATS = ("json", "csv", "latex", "plain")
KINDS = (
    "numbers",
    "polynomials",
    "fibonomials",
    "binomial",
    "evaluation",
    "verification",
)


@dataclass(frozen=True)
class OutputDocument:
    kind: str
    metadata: dict
    payload: object

    def to_json(self) -> str:
        body = {"kind": self.kind, "metadata": self.metadata, "payload": self.payload}
        return json.dumps(body, indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        for row in _csv_rows(self):
            writer.writerow(row)
        return buffer.getvalue().rstrip("\r\n")

    def to_latex(self) -> str:
        return _LATEX_RENDERERS[self.kind](self)

    def to_plain(self) -> str:
        return _PLAIN_RENDERERS[self.kind](self)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "latex":
            return self.to_latex()
        if fmt == "plain":
            return self.to_plain()
        raise ValueError(f"unknown format: {fmt!r}")


def load_schema() -> dict:
    """The JSON schema every JSON document validates against."""
    text = resources.files(__package__).joinpath("output_schema.json").read_text()
    return json.loads(text)


def latex_rational(value: Fraction | int) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return f"{sign}\\frac{{{abs(f.numerator)}}}{{{f.denominator}}}"


def latex_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for i in range(p.degree, -1, -1):
        c = Fraction(p.coefficient(i))
        if c == 0:
            continue
        negative = c < 0
        magnitude = -c if negative else c
        variable = "" if i == 0 else ("x" if i == 1 else f"x^{{{i}}}")
        show_coeff = magnitude != 1 or not variable
        body = (latex_rational(magnitude) if show_coeff else "") + variable
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"{'-' if negative else '+'} {body}")
    return " ".join(pieces)


def _symbol(variant: str, n, arg: str = "x") -> str:
    base = f"B_{{{n}}}" if variant == "classical" else f"B^{{F}}_{{{n}}}"
    return f"{base}({arg})"


def _plain_symbol(variant: str, n, arg: str = "x") -> str:
    base = f"B_{n}" if variant == "classical" else f"B_{n}^F"
    return f"{base}({arg})"


def _number_symbol(variant: str, n) -> str:
    return f"b_{n}" if variant == "classical" else f"b_{n}^F"


# -- CSV ---------------------------------------------------------------


def _csv_rows(doc: OutputDocument):
    kind = doc.kind
    if kind == "numbers":
        if doc.metadata["method"] == "both":
            yield ["n", "series", "recursive", "match"]
            for row in doc.payload:
                yield [row["n"], row["series"], row["recursive"], str(row["match"]).lower()]
        else:
            yield ["n", "value"]
            for row in doc.payload:
                yield [row["n"], row["value"]]
    elif kind == "polynomials":
        yield ["degree", "coefficient"]
        for i, c in enumerate(doc.payload["coefficients"]):
            yield [i, c]
    elif kind == "fibonomials":
        yield ["n", "k", "value"]
        for row in doc.payload:
            for k, value in enumerate(row["row"]):
                yield [row["n"], k, value]
    elif kind == "binomial":
        yield ["k", "sign", "coefficient", "monomial"]
        for term in doc.payload["terms"]:
            yield [term["k"], term["sign"], term["coefficient"], term["monomial"]]
    elif kind == "evaluation":
        yield ["variant", "n", "x", "value"]
        meta = doc.metadata
        yield [meta["variant"], meta["n"], meta["x"], doc.payload["value"]]
    elif kind == "verification":
        yield [
            "identity",
            "degree_min",
            "degree_max",
            "checked",
            "passed",
            "counterexample_degree",
            "lhs",
            "rhs",
        ]
        for row in doc.payload:
            ce = row["counterexample"]
            yield [
                row["identity"],
                row["degree_min"],
                row["degree_max"],
                row["checked"],
                str(row["passed"]).lower(),
                "" if ce is None else ce["degree"],
                "" if ce is None else ce["lhs"],
                "" if ce is None else ce["rhs"],
            ]
    else:
        raise ValueError(f"unknown kind: {kind!r}")


# -- LaTeX -------------------------------------------------------------


def _tabular(header: list[str], rows: list[list[str]], column_format: str) -> str:
    lines = [f"\\begin{{tabular}}{{{column_format}}}", "\\hline"]
    lines.append(" & ".join(header) + r" \\")
    lines.append("\\hline")
    for row in rows:
        lines.append(" & ".join(row) + r" \\")
    lines.append("\\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def _latex_numbers(doc: OutputDocument) -> str:
    variant = doc.metadata["variant"]
    symbol = "b_{n}" if variant == "classical" else "b^{F}_{n}"
    if doc.metadata["method"] == "both":
        rows = [
            [
                str(row["n"]),
                f"${latex_rational(Fraction(row['series']))}$",
                f"${latex_rational(Fraction(row['recursive']))}$",
            ]
            for row in doc.payload
        ]
        return _tabular(["$n$", f"${symbol}$ (series)", f"${symbol}$ (recursive)"], rows, "rrr")
    rows = [
        [str(row["n"]), f"${latex_rational(Fraction(row['value']))}$"]
        for row in doc.payload
    ]
    return _tabular(["$n$", f"${symbol}$"], rows, "rr")


def _latex_polynomials(doc: OutputDocument) -> str:
    meta = doc.metadata
    poly = Polynomial([Fraction(c) for c in doc.payload["coefficients"]])
    lines = [
        "\\begin{align*}",
        f"{_symbol(meta['variant'], meta['n'])} &= {latex_polynomial(poly)}",
        "\\end{align*}",
    ]
    return "\n".join(lines)


def _latex_fibonomials(doc: OutputDocument) -> str:
    width = doc.metadata["max_n"] + 1
    rows = []
    for row in doc.payload:
        cells = [f"${v}$" for v in row["row"]]
        cells += [""] * (width - len(cells))
        rows.append([str(row["n"])] + cells)
    return _tabular(["$n$"] + [f"$k={k}$" for k in range(width)], rows, "r" * (width + 1))


def _latex_binomial(doc: OutputDocument) -> str:
    n = doc.metadata["n"]
    terms = doc.payload["terms"]
    pieces = []
    for term in terms:
        coefficient = term["coefficient"]
        xexp, yexp = n - term["k"], term["k"]
        xpart = "" if xexp == 0 else ("x" if xexp == 1 else f"x^{{{xexp}}}")
        ypart = "" if yexp == 0 else ("y" if yexp == 1 else f"y^{{{yexp}}}")
        body = (coefficient if coefficient != "1" or not (xpart or ypart) else "") + xpart + ypart
        if not pieces:
            pieces.append(body if term["sign"] > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if term['sign'] > 0 else '-'} {body}")
    lines = [
        "\\begin{align*}",
        f"(x+y)_F^{{{n}}} &= " + " ".join(pieces),
        "\\end{align*}",
    ]
    return "\n".join(lines)


def _latex_evaluation(doc: OutputDocument) -> str:
    meta = doc.metadata
    point = latex_rational(Fraction(meta["x"]))
    value = latex_rational(Fraction(doc.payload["value"]))
    lines = [
        "\\begin{align*}",
        f"{_symbol(meta['variant'], meta['n'], point)} &= {value}",
        "\\end{align*}",
    ]
    return "\n".join(lines)


def _latex_verification(doc: OutputDocument) -> str:
    rows = [
        [
            f"\\texttt{{{row['identity']}}}",
            f"{row['degree_min']}..{row['degree_max']}",
            "pass" if row["passed"] else "fail",
        ]
        for row in doc.payload
    ]
    return _tabular(["identity", "range", "result"], rows, "lrr")


_LATEX_RENDERERS = {
    "numbers": _latex_numbers,
    "polynomials": _latex_polynomials,
    "fibonomials": _latex_fibonomials,
    "binomial": _latex_binomial,
    "evaluation": _latex_evaluation,
    "verification": _latex_verification,
}


# -- plain text ---------------------------------------------------------


def _plain_numbers(doc: OutputDocument) -> str:
    variant = doc.metadata["variant"]
    lines = []
    if doc.metadata["method"] == "both":
        for row in doc.payload:
            match = "yes" if row["match"] else "NO"
            lines.append(
                f"{_number_symbol(variant, row['n'])}: series={row['series']} "
                f"recursive={row['recursive']} match={match}"
            )
    else:
        for row in doc.payload:
            lines.append(f"{_number_symbol(variant, row['n'])} = {row['value']}")
    return "\n".join(lines)


def _plain_polynomials(doc: OutputDocument) -> str:
    meta = doc.metadata
    return "\n".join(
        [
            f"{_plain_symbol(meta['variant'], meta['n'])} = {doc.payload['rendered']}",
            "coefficients (ascending): " + ", ".join(doc.payload["coefficients"]),
        ]
    )


def _plain_fibonomials(doc: OutputDocument) -> str:
    return "\n".join(
        f"row {row['n']}: " + " ".join(row["row"]) for row in doc.payload
    )


def _plain_binomial(doc: OutputDocument) -> str:
    return f"(x+y)_F^{doc.metadata['n']} = {doc.payload['rendered']}"


def _plain_evaluation(doc: OutputDocument) -> str:
    meta = doc.metadata
    return f"{_plain_symbol(meta['variant'], meta['n'], meta['x'])} = {doc.payload['value']}"


def _plain_verification(doc: OutputDocument) -> str:
    lines = []
    for row in doc.payload:
        span = f"[{row['degree_min']}..{row['degree_max']}]"
        if row["passed"]:
            lines.append(f"PASS {row['identity']} {span} ({row['checked']} checks)")
        else:
            ce = row["counterexample"]
            lines.append(
                f"FAIL {row['identity']} {span}: counterexample at {ce['degree']}: "
                f"{ce['lhs']} != {ce['rhs']}"
            )
    failures = sum(1 for row in doc.payload if not row["passed"])
    lines.append(
        "all identities passed" if failures == 0 else f"FAILURES: {failures}"
    )
    return "\n".join(lines)


_PLAIN_RENDERERS = {
    "numbers": _plain_numbers,
    "polynomials": _plain_polynomials,
    "fibonomials": _plain_fibonomials,
    "binomial": _plain_binomial,
    "evaluation": _plain_evaluation,
    "verification": _plain_verification,
}
