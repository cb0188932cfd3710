"""Algebraic tangle expressions.

A rational tangle is a reduced fraction p/q. Larger tangles are built with
the sum `+` (gluing side by side) and the product `o`, where T1 o T2 means:
reflect T1, rotate it a quarter turn, then sum with T2. Expressions are
immutable binary trees; `parse` and `render` convert to and from the text
grammar

    expr := sum ('o' sum)*
    sum  := atom ('+' atom)*
    atom := '(' expr ')' | fraction
    fraction := ['-'] int ['/' int]

with `+` binding tighter than `o` and both operators left-associative.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import FamilyRange, ParseError, ZeroDenominator


class TangleExpr:
    """Base class for expression nodes."""

    def is_montesinos(self):
        """True when the subtree is a sum of rational tangles (no product)."""
        return not any(isinstance(n, Product) for n in self.nodes())

    def nodes(self):
        """Yield every node of the subtree, depth first, left to right."""
        yield self
        for child in self._children():
            yield from child.nodes()

    def leaves(self):
        """Yield the Leaf nodes in left-to-right order."""
        for n in self.nodes():
            if isinstance(n, Leaf):
                yield n

    def _children(self):
        return ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Leaf(TangleExpr):
    fraction: Fraction


@dataclass(frozen=True)
class Sum(TangleExpr):
    left: TangleExpr
    right: TangleExpr

    def _children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Product(TangleExpr):
    left: TangleExpr
    right: TangleExpr

    def _children(self):
        return (self.left, self.right)


def nodes_with_parity(expr, parity=0):
    """Yield (node, reflection_parity) pairs over the whole tree.

    The left operand of a product gets reflected once more than its parent;
    every other child inherits its parent's parity.
    """
    yield expr, parity
    if isinstance(expr, Product):
        yield from nodes_with_parity(expr.left, parity + 1)
        yield from nodes_with_parity(expr.right, parity)
    elif isinstance(expr, Sum):
        yield from nodes_with_parity(expr.left, parity)
        yield from nodes_with_parity(expr.right, parity)


def reflection_parity(expr, node):
    """Reflection parity of `node` (by identity) inside `expr`."""
    for n, k in nodes_with_parity(expr):
        if n is node:
            return k
    raise ValueError("node is not part of the expression")


def montesinos_factors(expr, parity=0):
    """List the maximal product-free subtrees with their reflection parity.

    These are the Montesinos tangles an arborescent expression is built from.
    """
    if expr.is_montesinos():
        return [(expr, parity)]
    if isinstance(expr, Product):
        return montesinos_factors(expr.left, parity + 1) + montesinos_factors(
            expr.right, parity
        )
    return montesinos_factors(expr.left, parity) + montesinos_factors(
        expr.right, parity
    )


# ---------------------------------------------------------------------------
# parsing


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+o()/-":
            tokens.append((ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append((text[i:j], i))
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, i)
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def here(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        node = self.sum()
        while self.peek() == "o":
            self.take()
            node = Product(node, self.sum())
        return node

    def sum(self):
        node = self.atom()
        while self.peek() == "+":
            self.take()
            node = Sum(node, self.atom())
        return node

    def atom(self):
        tok = self.peek()
        if tok == "(":
            open_pos = self.here()
            self.take()
            node = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced parenthesis", open_pos)
            self.take()
            return node
        return self.fraction()

    def fraction(self):
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ParseError("expected a fraction", self.here())
        num_pos = self.here()
        num = int(self.take()[0])
        den = 1
        if self.peek() == "/":
            self.take()
            tok = self.peek()
            if tok is None or not tok.isdigit():
                raise ParseError("expected a denominator", self.here())
            den_pos = self.here()
            den = int(self.take()[0])
            if den == 0:
                raise ZeroDenominator("zero denominator", den_pos)
        if num == 0:
            raise ParseError("zero tangle is not allowed", num_pos)
        return Leaf(Fraction(sign * num, den))


def parse(text):
    """Parse expression text into a TangleExpr tree."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty input", 0)
    node = parser.expr()
    if parser.peek() is not None:
        raise ParseError("unexpected token %r" % parser.peek(), parser.here())
    return node


def render(expr):
    """Canonical text for an expression; reparses to an identical tree."""
    if isinstance(expr, Leaf):
        f = expr.fraction
        if f.denominator == 1:
            return str(f.numerator)
        return "%d/%d" % (f.numerator, f.denominator)
    if isinstance(expr, Sum):
        left = render(expr.left)
        right = render(expr.right)
        if isinstance(expr.right, Sum):
            right = "(%s)" % right
        return "%s + %s" % (left, right)
    left = render(expr.left)
    right = render(expr.right)
    if isinstance(expr.left, Sum):
        left = "(%s)" % left
    if isinstance(expr.right, (Sum, Product)):
        right = "(%s)" % right
    return "%s o %s" % (left, right)


def mirror(expr):
    """Mirror image: negate every leaf fraction, keep the tree shape."""
    if isinstance(expr, Leaf):
        return Leaf(-expr.fraction)
    if isinstance(expr, Sum):
        return Sum(mirror(expr.left), mirror(expr.right))
    return Product(mirror(expr.left), mirror(expr.right))


# ---------------------------------------------------------------------------
# the kn family


def kn(n):
    """The family member N((-1/n + 1/(n+1)) o (-1/n + 1/(n+1))), n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise FamilyRange("the kn family needs an integer n >= 2, got %r" % (n,))
    factor = Sum(Leaf(Fraction(-1, n)), Leaf(Fraction(1, n + 1)))
    return Product(factor, factor)


def family_index(expr, include_mirror=True):
    """Return n when expr is kn(n) (or its mirror), else None."""
    if not isinstance(expr, Product):
        return None
    for candidate in (expr, mirror(expr) if include_mirror else None):
        if candidate is None:
            continue
        for side in (candidate.left, candidate.right):
            if not isinstance(side, Sum):
                break
            if not (isinstance(side.left, Leaf) and isinstance(side.right, Leaf)):
                break
        else:
            a = candidate.left.left.fraction
            b = candidate.left.right.fraction
            if a.numerator == -1 and b == Fraction(1, a.denominator + 1):
                n = a.denominator
                if n >= 2 and candidate.left == candidate.right:
                    return n
    return None


def _cf_entry_total(p, q):
    # sum of continued-fraction entries of |p|/q via the Euclidean algorithm
    a, b = abs(p), q
    total = 0
    while b:
        total += a // b
        a, b = b, a % b
    return total


def crossing_count(expr):
    """Diagram crossing count: total continued-fraction entries per leaf.

    This counts the crossings of the obvious twist-region diagram, an upper
    bound on the crossing number, not the crossing number itself.
    """
    return sum(
        _cf_entry_total(leaf.fraction.numerator, leaf.fraction.denominator)
        for leaf in expr.leaves()
    )


def family_crossing_count(n):
    """Exact crossing number 4n of the n-th family knot."""
    if not isinstance(n, int) or n < 2:
        raise FamilyRange("the kn family needs an integer n >= 2, got %r" % (n,))
    return 4 * n
