"""Textual syntax: polynomial parser/printer and the problem-file format.

Grammar (whitespace insensitive)::

    poly   := [sign] term (("+"|"-") term)*
    term   := integer | [integer ["*"]] factor (["*"] factor)*
    factor := var ["^" integer]

Products may be written by juxtaposition ("2x^2y") or with "*".  Variable
names are ASCII identifiers; a run of letters such as "xy" is split
greedily into declared variable names, so "xy" means x*y when x and y are
declared but stays a single variable when "xy" itself is declared.

A problem file is a single JSON object; see :class:`ProblemFile`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    ExponentOverflow,
    ParseError,
    ProblemFormatError,
    UnknownVariable,
)
from .order_ideal import CoefficientIdealMapping, validate_mapping
from .poly import Monomial, MonomialOrder, Polynomial, mon_one

EXPONENT_LIMIT = 2**20

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"[0-9]+")
_NAME_OK_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        """Next token as (kind, value, position) without consuming it."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("eof", None, self.pos)
        ch = self.text[self.pos]
        if ch in "+-^*":
            return (ch, ch, self.pos)
        m = _INT_RE.match(self.text, self.pos)
        if m:
            return ("int", m.group(), self.pos)
        m = _IDENT_RE.match(self.text, self.pos)
        if m:
            return ("name", m.group(), self.pos)
        raise ParseError(f"unexpected character {ch!r}", self.pos)

    def take(self):
        kind, value, pos = self.peek()
        if kind in ("int", "name"):
            self.pos = pos + len(value)
        elif kind != "eof":
            self.pos = pos + 1
        return kind, value, pos


def _split_variables(name: str, pos: int, var_index: dict) -> list[int]:
    """Split a letter run into declared variable names, longest match first."""
    out = []
    i = 0
    while i < len(name):
        for j in range(len(name), i, -1):
            cand = name[i:j]
            if cand in var_index:
                out.append(var_index[cand])
                i = j
                break
        else:
            raise UnknownVariable(f"unknown variable {name[i:]!r}", pos + i)
    return out


def parse_poly(vars: Sequence[str], text: str) -> Polynomial:
    """Parse ``text`` into a polynomial over the declared variables."""
    var_index = {v: i for i, v in enumerate(vars)}
    arity = len(vars)
    toks = _Tokenizer(text)
    acc: dict[Monomial, int] = {}

    def parse_exponent():
        kind, value, pos = toks.take()
        if kind != "int":
            raise ParseError("expected an integer exponent after '^'", pos)
        e = int(value)
        if e <= 0:
            raise ParseError("exponent must be a positive integer", pos)
        if e > EXPONENT_LIMIT:
            raise ExponentOverflow(f"exponent {e} exceeds limit {EXPONENT_LIMIT}", pos)
        return e

    def parse_term(sign: int):
        coeff = sign
        exps = [0] * arity
        saw_factor = False
        kind, value, pos = toks.peek()
        if kind == "int":
            toks.take()
            coeff *= int(value)
            saw_factor = True
            k2, _, _ = toks.peek()
            if k2 == "*":
                toks.take()
                k3, _, p3 = toks.peek()
                if k3 != "name":
                    raise ParseError("expected a variable after '*'", p3)
        while True:
            kind, value, pos = toks.peek()
            if kind == "name":
                toks.take()
                indices = _split_variables(value, pos, var_index)
                # an exponent binds to the last variable of the run
                for vi in indices[:-1]:
                    exps[vi] += 1
                last = indices[-1]
                e = 1
                k2, _, _ = toks.peek()
                if k2 == "^":
                    toks.take()
                    e = parse_exponent()
                exps[last] += e
                if sum(exps) > EXPONENT_LIMIT:
                    raise ExponentOverflow("monomial degree exceeds limit", pos)
                saw_factor = True
                k2, _, _ = toks.peek()
                if k2 == "*":
                    toks.take()
                    k3, _, p3 = toks.peek()
                    if k3 != "name":
                        raise ParseError("expected a variable after '*'", p3)
            elif kind == "int":
                raise ParseError("integer literal must precede the variables", pos)
            else:
                break
        if not saw_factor:
            raise ParseError("expected a term", pos)
        acc_key = tuple(exps)
        acc[acc_key] = acc.get(acc_key, 0) + coeff

    # leading sign
    kind, value, pos = toks.peek()
    sign = 1
    if kind in ("+", "-"):
        toks.take()
        sign = -1 if kind == "-" else 1
    parse_term(sign)
    while True:
        kind, value, pos = toks.take()
        if kind == "eof":
            break
        if kind == "+":
            parse_term(1)
        elif kind == "-":
            parse_term(-1)
        else:
            raise ParseError(f"expected '+' or '-', found {value!r}", pos)
    return Polynomial(arity, acc)


def parse_monomial(vars: Sequence[str], text: str) -> Monomial:
    """Parse a product of variable powers (or "1") into an exponent vector."""
    p = parse_poly(vars, text)
    terms = p.terms()
    if len(terms) != 1 or terms[0].coefficient != 1:
        raise ParseError(f"{text!r} is not a monomial", 0)
    return terms[0].monomial


def format_monomial(vars: Sequence[str], mon: Monomial) -> str:
    if sum(mon) == 0:
        return "1"
    parts = []
    for name, e in zip(vars, mon):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


def format_poly(order: MonomialOrder, vars: Sequence[str], f: Polynomial) -> str:
    """Render ``f`` with terms descending under ``order``; round-trips with parse."""
    if f.is_zero:
        return "0"
    pieces = []
    for i, (c, mon) in enumerate(f.sorted_terms(order)):
        mon_txt = format_monomial(vars, mon)
        mag = abs(c)
        if mon_txt == "1":
            body = str(mag)
        elif mag == 1:
            body = mon_txt
        else:
            body = f"{mag}{mon_txt}"
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


@dataclass
class ProblemFile:
    """Parsed contents of a structured problem file.

    Sections other than ``vars`` are optional; each command of the CLI
    demands the sections it needs.
    """

    vars: tuple
    order: MonomialOrder | None = None
    ideal_generators: list = field(default_factory=list)
    mapping: CoefficientIdealMapping | None = None
    prebasis: list = field(default_factory=list)
    query_polys: list = field(default_factory=list)

    @property
    def arity(self) -> int:
        return len(self.vars)

    def require(self, section: str):
        value = getattr(self, section)
        if value is None or (isinstance(value, list) and not value):
            raise ProblemFormatError(f"problem file is missing required section {section!r}")
        return value

    def display_order(self) -> MonomialOrder:
        """Order used for printing when the file does not fix one."""
        if self.order is not None:
            return self.order
        return MonomialOrder("deglex", range(self.arity))


def _parse_order(obj, vars) -> MonomialOrder:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ProblemFormatError("order must be an object with a 'kind' field")
    kind = obj["kind"]
    priority_names = obj.get("priority", list(vars))
    if not isinstance(priority_names, list):
        raise ProblemFormatError("order priority must be a list of variable names")
    var_index = {v: i for i, v in enumerate(vars)}
    try:
        priority = [var_index[name] for name in priority_names]
    except KeyError as e:
        raise ProblemFormatError(f"order priority names unknown variable {e.args[0]!r}")
    try:
        return MonomialOrder(kind, priority)
    except ValueError as e:
        raise ProblemFormatError(str(e))


def _parse_poly_list(vars, values, section):
    if not isinstance(values, list) or not all(isinstance(s, str) for s in values):
        raise ProblemFormatError(f"section {section!r} must be a list of polynomial strings")
    out = []
    for s in values:
        try:
            out.append(parse_poly(vars, s))
        except ParseError as e:
            raise ProblemFormatError(f"in section {section!r}, {s!r}: {e}")
    return out


def load_problem_text(text: str) -> ProblemFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemFormatError(f"problem file is not valid JSON: {e}")
    if not isinstance(obj, dict):
        raise ProblemFormatError("problem file must be a single JSON object")
    known = {"vars", "order", "ideal_generators", "mapping", "prebasis", "query_polys"}
    unknown = set(obj) - known
    if unknown:
        raise ProblemFormatError(f"unknown sections: {sorted(unknown)}")

    vars = obj.get("vars")
    if (
        not isinstance(vars, list)
        or not vars
        or not all(isinstance(v, str) and _NAME_OK_RE.match(v) for v in vars)
    ):
        raise ProblemFormatError("'vars' must be a non-empty list of identifiers")
    if len(set(vars)) != len(vars):
        raise ProblemFormatError("'vars' contains duplicate names")
    vars = tuple(vars)

    problem = ProblemFile(vars=vars)
    if "order" in obj:
        problem.order = _parse_order(obj["order"], vars)
    if "ideal_generators" in obj:
        problem.ideal_generators = _parse_poly_list(vars, obj["ideal_generators"], "ideal_generators")
    if "prebasis" in obj:
        problem.prebasis = _parse_poly_list(vars, obj["prebasis"], "prebasis")
    if "query_polys" in obj:
        problem.query_polys = _parse_poly_list(vars, obj["query_polys"], "query_polys")
    if "mapping" in obj:
        entries = obj["mapping"]
        if not isinstance(entries, list):
            raise ProblemFormatError("'mapping' must be a list of {monomial, generators} objects")
        raw = []
        for entry in entries:
            if (
                not isinstance(entry, dict)
                or "monomial" not in entry
                or "generators" not in entry
                or not isinstance(entry["generators"], list)
                or not all(isinstance(g, int) for g in entry["generators"])
            ):
                raise ProblemFormatError(
                    "each mapping entry must be {'monomial': str, 'generators': [int, ...]}"
                )
            try:
                mon = parse_monomial(vars, entry["monomial"])
            except ParseError as e:
                raise ProblemFormatError(f"bad mapping monomial {entry['monomial']!r}: {e}")
            raw.append((mon, entry["generators"]))
        problem.mapping = validate_mapping(len(vars), raw)
    return problem


def load_problem(path: str) -> ProblemFile:
    with open(path, "r", encoding="utf-8") as fh:
        return load_problem_text(fh.read())
