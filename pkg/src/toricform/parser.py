"""The ``.form`` text format for polynomial p-forms.

    # comments run to the end of the line
    vars: x y z
    p: 2                      (optional, inferred from the differentials)
    form: (z^6 + x*y) dx^dy + x*z dx^dz
          + (x^6 + x^4*y*z + y*z) dy^dz

A term is an optional coefficient expression followed by ``d<var>`` factors
joined by ``^``.  Inside coefficients ``^`` is a power and products are
written with ``*`` or plain juxtaposition (``2 x``); ``/`` divides by a
nonzero rational constant.  The form is given in the standard basis dX_J.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormSyntaxError, InputError
from .forms import StandardPForm, _sort_sign, to_logarithmic
from .polynomial import Polynomial

_HEADER = re.compile(r"^\s*(vars|p|form)\s*:", re.IGNORECASE)
_TOKEN = re.compile(r"(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class FormDocument:
    """Parsed form: variable names, degree, and (coefficient, exponent, basis) terms.

    Terms are canonical: bases sorted with the wedge sign applied, duplicates
    summed, zeros dropped, ordered by basis then by exponent (highest first).
    """

    variables: tuple
    p: int
    terms: tuple

    @property
    def n(self):
        return len(self.variables)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(body, names):
    """body is a list of (line number, column offset, text) fragments."""
    toks = []
    for lineno, offset, text in body:
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            col = offset + pos + 1
            m = _TOKEN.match(text, pos)
            if not m:
                raise FormSyntaxError(f"unexpected character {text[pos]!r}", lineno, col)
            if m.group("num"):
                toks.append(_Tok("num", m.group("num"), lineno, col))
            elif m.group("id"):
                word = m.group("id")
                if word in names:
                    toks.append(_Tok("var", word, lineno, col))
                elif word.startswith("d") and word[1:] in names:
                    toks.append(_Tok("diff", word, lineno, col))
                else:
                    raise FormSyntaxError(f"unknown variable {word!r}", lineno, col)
            else:
                toks.append(_Tok(m.group("op"), m.group("op"), lineno, col))
            pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks, names, end):
        self.toks = toks
        self.names = list(names)
        self.n = len(names)
        self.i = 0
        self.end = end  # (line, col) reported for unexpected end of input

    def peek(self, offset=0):
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else None

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        line, col = (tok.line, tok.col) if tok else self.end
        raise FormSyntaxError(msg, line, col)

    def take(self, kind):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of input" if tok is None else repr(tok.text)
            self.error(f"expected {kind!r}, found {found}")
        self.i += 1
        return tok

    def at(self, *kinds):
        tok = self.peek()
        return tok is not None and tok.kind in kinds

    # form := ['+'|'-'] term (('+'|'-') term)*  |  '0'
    def form(self):
        terms = []
        if len(self.toks) == 1 and self.toks[0].kind == "num" and int(self.toks[0].text) == 0:
            return terms
        sign = self.sign()
        terms.append(self.term(sign))
        while self.at("+", "-"):
            sign = self.sign()
            terms.append(self.term(sign))
        if self.peek() is not None:
            self.error(f"unexpected {self.peek().text!r}")
        return terms

    def sign(self):
        s = 1
        while self.at("+", "-"):
            if self.take(self.peek().kind).kind == "-":
                s = -s
        return s

    def term(self, sign):
        coeff = Polynomial.constant(self.n, sign)
        start = self.peek()
        if start is None:
            self.error("expected a term")
        if not self.at("diff"):
            coeff = coeff * self.product()
        if not self.at("diff"):
            self.error("a term must end with differentials such as dx or dx^dy")
        basis = [self.take("diff")]
        while self.at("^") and self.peek(1) is not None and self.peek(1).kind == "diff":
            self.take("^")
            basis.append(self.take("diff"))
        if self.at("^"):
            self.error("'^' after a differential must be followed by another differential")
        if self.at("num", "var", "("):
            self.error("differentials must come last in a term")
        return coeff, [self.names.index(t.text[1:]) for t in basis], start

    # product := factor (('*' | '/' | juxtaposition) factor)*
    def product(self):
        acc = self.factor()
        while True:
            if self.at("*"):
                self.take("*")
                acc = acc * self.factor()
            elif self.at("/"):
                tok = self.take("/")
                den = self.factor()
                if not den.is_constant() or den.is_zero():
                    self.error("division only by a nonzero constant", tok)
                acc = acc * (1 / den.coefficient((0,) * self.n))
            elif self.at("num", "var", "("):
                acc = acc * self.factor()
            else:
                return acc

    # factor := atom ('^' integer)?
    def factor(self):
        base = self.atom()
        if self.at("^") and not (self.peek(1) is not None and self.peek(1).kind == "diff"):
            self.take("^")
            exp = self.take("num")
            base = base ** int(exp.text)
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if tok.kind == "num":
            self.i += 1
            return Polynomial.constant(self.n, int(tok.text))
        if tok.kind == "var":
            self.i += 1
            return Polynomial.variable(self.n, self.names.index(tok.text))
        if tok.kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        if tok.kind == "diff":
            self.error("differential inside a coefficient")
        self.error(f"unexpected {tok.text!r}")

    # expr := ['+'|'-'] product (('+'|'-') product)*
    def expr(self):
        s = self.sign()
        acc = self.product() * s
        while self.at("+", "-"):
            s = self.sign()
            acc = acc + self.product() * s
        return acc


def _sections(text):
    """Split into header values and the form body, keeping positions."""
    vars_line = p_line = None
    body = []
    in_form = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        m = _HEADER.match(line)
        if m:
            key = m.group(1).lower()
            rest = line[m.end():]
            entry = (lineno, m.end(), rest)
            if key == "vars":
                if vars_line or in_form:
                    raise FormSyntaxError("'vars:' must appear once, before 'form:'", lineno, 1)
                vars_line = entry
            elif key == "p":
                if p_line or in_form:
                    raise FormSyntaxError("'p:' must appear once, before 'form:'", lineno, 1)
                p_line = entry
            else:
                if in_form:
                    raise FormSyntaxError("'form:' appears twice", lineno, 1)
                in_form = True
                body.append(entry)
        elif in_form:
            body.append((lineno, 0, line))
        elif line.strip():
            raise FormSyntaxError("expected 'vars:', 'p:' or 'form:'", lineno,
                                  len(line) - len(line.lstrip()) + 1)
    return vars_line, p_line, body, in_form


def parse_form(text):
    """Parse ``.form`` text into a canonical FormDocument."""
    lines = text.splitlines() or [""]
    end = (len(lines), len(lines[-1]) + 1)
    vars_line, p_line, body, has_form = _sections(text)
    if vars_line is None:
        raise FormSyntaxError("missing 'vars:' header", 1, 1)
    if not has_form:
        raise FormSyntaxError("missing 'form:' section", *end)
    lineno, offset, rest = vars_line
    names = rest.split()
    if not names:
        raise FormSyntaxError("no variables declared", lineno, offset + 1)
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) or name.startswith("d"):
            col = offset + rest.index(name) + 1
            raise FormSyntaxError(f"invalid variable name {name!r}", lineno, col)
    if len(set(names)) != len(names):
        raise FormSyntaxError("duplicate variable name", lineno, offset + 1)
    n = len(names)

    p = None
    if p_line is not None:
        pl, po, prest = p_line
        if not re.fullmatch(r"\s*\d+\s*", prest):
            raise FormSyntaxError("'p:' needs a nonnegative integer", pl, po + 1)
        p = int(prest)

    toks = _tokenize(body, set(names))
    if not toks:
        raise FormSyntaxError("empty form", *end)
    raw_terms = _Parser(toks, names, end).form()

    acc = {}
    for coeff, basis, tok in raw_terms:
        if p is None:
            p = len(basis)
        if len(basis) != p:
            raise FormSyntaxError(f"term has {len(basis)} differentials but p = {p}", tok.line, tok.col)
        sign = _sort_sign(basis)
        if sign == 0:
            continue
        key = tuple(sorted(basis))
        for e, c in coeff.items():
            acc[(key, e)] = acc.get((key, e), 0) + sign * c
    if p is None:
        raise InputError("cannot infer p from an empty form; add a 'p:' header")
    if not 1 <= p < n:
        raise InputError(f"form degree p = {p} must satisfy 1 <= p < n = {n}")
    terms = sorted(((Fraction(c), e, J) for (J, e), c in acc.items() if c != 0),
                   key=lambda t: (t[2], tuple(-x for x in t[1])))
    return FormDocument(tuple(names), p, tuple(terms))


def _coeff_str(c, exponent, names):
    mono = "*".join(names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exponent) if e)
    mag = abs(c)
    num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
    if not mono:
        return num
    return mono if mag == 1 else f"{num}*{mono}"


def format_document(doc):
    """Canonical text; parsing it gives back an equal document."""
    out = [f"vars: {' '.join(doc.variables)}", f"p: {doc.p}"]
    parts = []
    for J in sorted({t[2] for t in doc.terms}):
        group = [(c, e) for c, e, K in doc.terms if K == J]
        diff = "^".join("d" + doc.variables[j] for j in J)
        if len(group) == 1:
            c, e = group[0]
            sign, body = c < 0, _coeff_str(c, e, doc.variables)
        else:
            inner = []
            for c, e in group:
                piece = _coeff_str(c, e, doc.variables)
                inner.append(("-" if c < 0 else "") + piece if not inner
                             else ("- " if c < 0 else "+ ") + piece)
            sign, body = False, "(" + " ".join(inner) + ")"
        if not parts:
            parts.append(("-" if sign else "") + f"{body} {diff}")
        else:
            parts.append(("- " if sign else "+ ") + f"{body} {diff}")
    out.append("form: " + (" ".join(parts) if parts else "0"))
    return "\n".join(out) + "\n"


def to_standard_form(doc):
    coeffs = {}
    for c, e, J in doc.terms:
        mono = Polynomial.monomial(e, c)
        coeffs[J] = coeffs[J] + mono if J in coeffs else mono
    return StandardPForm(doc.n, doc.p, coeffs, doc.variables)


def load_form(text):
    """Parse text straight to the logarithmic representation."""
    return to_logarithmic(to_standard_form(parse_form(text)))


def document_from_form(form):
    """FormDocument of a standard or logarithmic form (converted to the standard basis)."""
    from .forms import LogPForm, to_standard

    if isinstance(form, LogPForm):
        form = to_standard(form)
    terms = sorted(((c, e, J) for J, g in form.coeffs.items() for e, c in g.items()),
                   key=lambda t: (t[2], tuple(-x for x in t[1])))
    return FormDocument(tuple(form.names), form.p, tuple(terms))
