"""Observable expressions over partitions.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := ['-'] factor (('*' factor) | ('/' number))*
    factor := atom ['^' integer]
    atom   := number | 'n' | 'p' k [where] | 'pbar' k [where]
            | 'sstar[' partition ']' [where]
            | '(' expr ')' | '(' expr '-' ')' | '<' expr '>'
    where  := '(' ('lambda' | 'alpha' | 'beta') ')'

``(X-)`` is X centred by its mean under the active measure and ``<X>``
is that mean itself.  Everything expands into a polynomial in atoms
whose coefficients are rationals or, in q-series mode, series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, parse_partition, two_quotient
from .shifted import p_bar_k, p_k, shifted_schur

WHERE = ("lambda", "alpha", "beta")


@dataclass(frozen=True, order=True)
class Atom:
    """A basic functional of λ: kind in {'size', 'p', 'pbar', 'sstar'}."""

    kind: str
    index: tuple = ()
    where: str = "lambda"

    def __str__(self):
        if self.kind == "size":
            return "n"
        suffix = "" if self.where == "lambda" else f"({self.where})"
        if self.kind == "sstar":
            return f"sstar[{','.join(map(str, self.index)) or '-'}]{suffix}"
        return f"{self.kind}{self.index[0]}{suffix}"

    def size_only(self) -> bool:
        """True if the value depends on |λ| alone."""
        return self.kind == "size" or (self.kind == "p" and self.index == (1,)
                                       and self.where == "lambda")


@lru_cache(maxsize=1 << 18)
def evaluate_atom(atom: Atom, lam: Partition) -> Fraction:
    if atom.kind == "size":
        return Fraction(lam.size)
    if atom.where == "lambda":
        target = lam
    else:
        tq = two_quotient(lam)
        target = tq.alpha if atom.where == "alpha" else tq.beta
    if atom.kind == "p":
        return p_k(target, atom.index[0])
    if atom.kind == "pbar":
        return p_bar_k(target, atom.index[0])
    if atom.kind == "sstar":
        return shifted_schur(Partition(atom.index), target)
    raise ValueError(f"unknown atom {atom}")


# ---------------------------------------------------------------- syntax tree

@dataclass(frozen=True)
class Node:
    op: str            # 'num', 'atom', 'add', 'mul', 'pow', 'neg', 'mean', 'center'
    args: tuple = ()
    value: object = None


_TOKENS = re.compile(r"\s*(sstar\[[^\]]*\]|pbar\d+|p\d+|\d+|lambda|alpha|beta|n|[-+*/^()<>])")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise SyntaxError(f"unexpected input at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise SyntaxError(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Node:
        node = self.expr()
        if self.peek() is not None:
            raise SyntaxError(f"trailing input {self.toks[self.i:]}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            if self.peek() == "-" and self.peek(1) == ")":
                break          # centring marker, handled by the caller
            op = self.take()
            rhs = self.term()
            node = Node("add", (node, rhs if op == "+" else Node("neg", (rhs,))))
        return node

    def term(self) -> Node:
        if self.peek() == "-":
            self.take()
            return Node("neg", (self.term(),))
        node = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                node = Node("mul", (node, self.factor()))
            else:
                den = int(self.take())
                if den == 0:
                    raise ZeroDivisionError("division by zero in observable")
                node = Node("mul", (node, Node("num", value=Fraction(1, den))))
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek() == "^":
            self.take()
            node = Node("pow", (node,), int(self.take()))
        return node

    def where(self) -> str:
        if self.peek() == "(" and self.peek(1) in WHERE:
            self.take("(")
            w = self.take()
            self.take(")")
            return w
        return "lambda"

    def atom(self) -> Node:
        tok = self.take()
        if tok.isdigit():
            return Node("num", value=Fraction(int(tok)))
        if tok == "n":
            return Node("atom", value=Atom("size"))
        if tok.startswith("pbar"):
            return Node("atom", value=Atom("pbar", (int(tok[4:]),), self.where()))
        if tok.startswith("p"):
            k = int(tok[1:])
            if k < 1:
                raise SyntaxError("power sums start at p1")
            return Node("atom", value=Atom("p", (k,), self.where()))
        if tok.startswith("sstar["):
            mu = parse_partition(tok[6:-1])
            return Node("atom", value=Atom("sstar", tuple(mu), self.where()))
        if tok == "(":
            inner = self.expr()
            if self.peek() == "-" and self.peek(1) == ")":
                self.take("-")
                self.take(")")
                return Node("center", (inner,))
            self.take(")")
            return inner
        if tok == "<":
            inner = self.expr()
            self.take(">")
            return Node("mean", (inner,))
        raise SyntaxError(f"unexpected token {tok!r}")


def parse_observable(text: str) -> Node:
    return _Parser(text).parse()


# ---------------------------------------------------------------- polynomials

def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, (int, Fraction)) else c.is_zero()


class Poly:
    """Polynomial in atoms: monomial (sorted tuple of (atom, exp)) -> scalar."""

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if not _is_zero(c)}

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    @classmethod
    def atom(cls, a: Atom) -> "Poly":
        return cls({((a, 1),): Fraction(1)})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Poly(out)

    def scale(self, k) -> "Poly":
        return Poly({m: c * k for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return Poly(out)

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(Fraction(1))
        for _ in range(k):
            out = out * self
        return out

    def atoms(self) -> set:
        return {a for m in self.terms for a, _ in m}

    def size_only(self) -> bool:
        return all(a.size_only() for a in self.atoms())


def _mono_mul(m1, m2):
    d = dict(m1)
    for a, e in m2:
        d[a] = d.get(a, 0) + e
    return tuple(sorted(d.items()))


def evaluate_monomial(mono, lam: Partition) -> Fraction:
    out = Fraction(1)
    for atom, e in mono:
        out *= evaluate_atom(atom, lam) ** e
    return out


def expand(node: Node, mean) -> Poly:
    """Expand a syntax tree; mean(poly) returns the scalar mean of a polynomial."""
    op = node.op
    if op == "num":
        return Poly.const(node.value)
    if op == "atom":
        return Poly.atom(node.value)
    if op == "add":
        return expand(node.args[0], mean) + expand(node.args[1], mean)
    if op == "neg":
        return expand(node.args[0], mean).scale(-1)
    if op == "mul":
        return expand(node.args[0], mean) * expand(node.args[1], mean)
    if op == "pow":
        return expand(node.args[0], mean) ** node.value
    if op == "mean":
        return Poly.const(mean(expand(node.args[0], mean)))
    if op == "center":
        inner = expand(node.args[0], mean)
        return inner + Poly.const(-mean(inner))
    raise ValueError(f"unknown node {op}")


def evaluate(text_or_node, lam) -> Fraction:
    """Value of a mean-free observable on one partition."""
    node = parse_observable(text_or_node) if isinstance(text_or_node, str) else text_or_node
    lam = Partition.coerce(lam)

    def no_mean(_):
        raise ValueError("means need a measure; use expectation()")
    poly = expand(node, no_mean)
    return sum((c * evaluate_monomial(m, lam) for m, c in poly.terms.items()),
               Fraction(0))
