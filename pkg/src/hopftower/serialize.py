"""JSON round-trips for every value the command line reads or writes,
plus the linear-expression parser for specifying class functions.

All serialized numbers are strings holding reduced fractions ("p" or
"p/q"), never floats.  Term lists are emitted in sorted word order so
equal values serialize byte-identically.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import LinearCharacter
from .elements import TensorElement, TensorSquare
from .theory import BaseElement, CharacterBasis, TheoryError


class ParseError(ValueError):
    """Malformed input text or JSON structure."""


# -- fractions ----------------------------------------------------------------

def fraction_to_str(value):
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else (
        f"{f.numerator}/{f.denominator}")


def fraction_from_str(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from exc


# -- theory files ---------------------------------------------------------------

def theory_to_dict(basis):
    return {
        "labels": list(basis.labels),
        "values": [[fraction_to_str(v) for v in row] for row in basis.table],
        "sizes": list(basis.sizes),
        "identity_class": basis.identity_class,
    }


def theory_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("theory must be a JSON object")
    missing = {"labels", "values", "sizes", "identity_class"} - set(data)
    if missing:
        raise ParseError(f"theory is missing keys: {sorted(missing)}")
    values = [[fraction_from_str(v) for v in row] for row in data["values"]]
    try:
        return CharacterBasis(data["labels"], values, tuple(data["sizes"]),
                              data["identity_class"])
    except (TheoryError, TypeError) as exc:
        raise ParseError(f"invalid theory: {exc}") from exc


# -- elements -------------------------------------------------------------------

def _label_indices(basis):
    return {lab: i for i, lab in enumerate(basis.labels)}


def element_to_dict(x, basis, base=None):
    out = dict(base or {})
    out["degree"] = x.degree
    out["terms"] = [
        {"word": [basis.labels[i] for i in word],
         "coeff": fraction_to_str(c)}
        for word, c in x.sorted_terms()
    ]
    return out


def element_from_dict(data, basis):
    if not isinstance(data, dict) or "degree" not in data:
        raise ParseError("element must be a JSON object with a degree")
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 0:
        raise ParseError(f"bad degree {degree!r}")
    index = _label_indices(basis)
    out = TensorElement(degree)
    for term in data.get("terms", ()):
        try:
            labels = term["word"]
            coeff = fraction_from_str(term["coeff"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad term {term!r}") from exc
        word = []
        for lab in labels:
            if lab not in index:
                raise ParseError(f"unknown basis label {lab!r}")
            word.append(index[lab])
        expected = max(degree - 1, 0)
        if len(word) != expected:
            raise ParseError(
                f"word length {len(word)} does not match degree {degree}")
        out += TensorElement(degree, {tuple(word): coeff})
    return out


def square_to_dict(sq, basis, base=None):
    out = dict(base or {})
    terms = []
    for ((ld, lw), (rd, rw)), c in sorted(sq.terms.items()):
        terms.append({
            "left": {"degree": ld, "word": [basis.labels[i] for i in lw]},
            "right": {"degree": rd, "word": [basis.labels[i] for i in rw]},
            "coeff": fraction_to_str(c),
        })
    out["terms"] = terms
    return out


def square_from_dict(data, basis):
    if not isinstance(data, dict):
        raise ParseError("tensor square must be a JSON object")
    index = _label_indices(basis)
    out = TensorSquare()

    def side(obj):
        degree = obj["degree"]
        word = tuple(index[lab] for lab in obj["word"])
        if len(word) != max(degree - 1, 0):
            raise ParseError(f"word length does not match degree {degree}")
        return degree, word

    for term in data.get("terms", ()):
        try:
            left = side(term["left"])
            right = side(term["right"])
            coeff = fraction_from_str(term["coeff"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad term {term!r}") from exc
        out.add_term((left, right), coeff)
    return out


# -- characters -----------------------------------------------------------------

def character_to_dict(chi, basis, base=None):
    return {
        "max_degree": chi.max_degree,
        "components": [element_to_dict(c, basis, base)
                       for c in chi.components],
    }


def character_from_dict(data, ctx):
    if not isinstance(data, dict) or "components" not in data:
        raise ParseError("character must be a JSON object with components")
    comps = [element_from_dict(c, ctx.basis) for c in data["components"]]
    try:
        return LinearCharacter(ctx, comps)
    except TheoryError as exc:
        raise ParseError(f"invalid character: {exc}") from exc


# -- reports ----------------------------------------------------------------------

def jsonable(obj):
    """Recursively convert a report-ish value to JSON-compatible data:
    fractions become fraction strings, unknown objects become reprs."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_to_str(obj)
    if isinstance(obj, dict):
        return {_key_str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    return repr(obj)


def _key_str(key):
    if isinstance(key, str):
        return key
    if isinstance(key, int):
        return str(key)
    return repr(key)


# -- expression language ----------------------------------------------------------

def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r} in expression")
    return tokens


class _Parser:
    """Linear expressions over basis labels: integers, labels, + - * /
    and parentheses.  Class functions may be scaled and divided by
    scalars but never multiplied together."""

    def __init__(self, tokens, basis, names):
        self.tokens = tokens
        self.pos = 0
        self.basis = basis
        self.names = names

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = self._add(value, rhs, op == "-")
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = (self._mul(value, rhs) if op == "*"
                     else self._div(value, rhs))
        return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        atom = self.atom()
        return -atom if sign < 0 else atom

    def atom(self):
        tok = self.take()
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return value
        if isinstance(tok, int):
            return Fraction(tok)
        if isinstance(tok, str) and tok not in "+-*/()":
            if tok in self.names:
                return self.names[tok]
            raise ParseError(f"unknown name {tok!r}")
        raise ParseError(f"unexpected token {tok!r}")

    @staticmethod
    def _add(a, b, subtract):
        if isinstance(a, Fraction) != isinstance(b, Fraction):
            raise ParseError("cannot add a scalar to a class function")
        return a - b if subtract else a + b

    @staticmethod
    def _mul(a, b):
        a_el = isinstance(a, BaseElement)
        b_el = isinstance(b, BaseElement)
        if a_el and b_el:
            raise ParseError("cannot multiply two class functions")
        return a * b if a_el else (b * a if b_el else a * b)

    @staticmethod
    def _div(a, b):
        if isinstance(b, BaseElement):
            raise ParseError("cannot divide by a class function")
        if b == 0:
            raise ParseError("division by zero")
        return a / b


def parse_expression(text, basis, scalars=None, aliases=None):
    """Evaluate a linear expression to a class function.

    Names resolve to basis labels, then ``aliases`` (extra elements such
    as the regular character), then ``scalars`` (numeric substitutions).
    A purely numeric result is rejected: the expression must name at
    least one class function.
    """
    names = {}
    for k, v in (scalars or {}).items():
        names[k] = Fraction(v)
    for k, v in (aliases or {}).items():
        names[k] = v
    for i, lab in enumerate(basis.labels):
        names[lab] = basis.basis_element(i)
    value = _Parser(_tokenize(text), basis, names).parse()
    if isinstance(value, Fraction):
        raise ParseError(
            f"expression {text!r} is a bare scalar, not a class function")
    return value
