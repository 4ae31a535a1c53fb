"""Mapping-class words: twist letters and symmetry letters with exponents.

A word is a sequence of letters in functional order: the leftmost letter is
applied last.  Twist letters name a stored curve (``A[1]``, ``B[6]``,
``C[g-1]``, ``E[0]``, ``D``); symmetry letters are ``S`` (rotation), ``R``
(reflection) and ``T`` (= S*R, reflection composed into the rotation).

Grammar (composition by ``*``, exponents by ``^n``, parentheses allowed)::

    word    = factor ("*" factor)*
    factor  = atom ("^" int)?
    atom    = letter | "(" word ")"
    letter  = "A[" idx "]" | "B[" idx "]" | "C[" idx "]" | "E[" idx "]"
            | "D" | "S" | "R" | "T"
    idx     = int | "g" | "g-" int | "g+" int

Index expressions are resolved against a genus when the word is evaluated.
"""

import re

TWIST_FAMILIES = ("A", "B", "C", "E", "D")
SYMBOL_LETTERS = ("S", "R", "T")

_IDX_RE = re.compile(r"^(?:(-?\d+)|g|g([+-]\d+))$")


class WordError(ValueError):
    """Raised for unparsable words or out-of-range indices."""


class IndexExpr(object):
    """An index that is either a literal or an offset from the genus."""

    def __init__(self, literal=None, offset=None):
        # exactly one of literal (int) / offset (int, meaning g+offset) is set
        self.literal = literal
        self.offset = offset

    @classmethod
    def parse(cls, text):
        m = _IDX_RE.match(text.strip())
        if not m:
            raise WordError("bad index expression %r" % (text,))
        if m.group(1) is not None:
            return cls(literal=int(m.group(1)))
        if m.group(2) is not None:
            return cls(offset=int(m.group(2)))
        return cls(offset=0)

    def resolve(self, genus):
        if self.literal is not None:
            return self.literal
        return genus + self.offset

    def __str__(self):
        if self.literal is not None:
            return str(self.literal)
        if self.offset == 0:
            return "g"
        return "g%+d" % self.offset

    def __eq__(self, other):
        return (isinstance(other, IndexExpr)
                and (self.literal, self.offset) == (other.literal, other.offset))

    def __hash__(self):
        return hash((self.literal, self.offset))


class Letter(object):
    """A single generator with an integer exponent."""

    def __init__(self, kind, index=None, power=1):
        if kind in SYMBOL_LETTERS:
            assert index is None
        elif kind == "D":
            assert index is None
        elif kind in TWIST_FAMILIES:
            assert index is not None
        else:
            raise WordError("unknown letter kind %r" % (kind,))
        self.kind = kind
        self.index = index
        self.power = power

    @property
    def is_twist(self):
        return self.kind in TWIST_FAMILIES

    def inverse(self):
        return Letter(self.kind, self.index, -self.power)

    def with_power(self, power):
        return Letter(self.kind, self.index, power)

    def base_str(self):
        if self.kind == "D" or self.kind in SYMBOL_LETTERS:
            return self.kind
        return "%s[%s]" % (self.kind, self.index)

    def __str__(self):
        if self.power == 1:
            return self.base_str()
        return "%s^%d" % (self.base_str(), self.power)

    def __repr__(self):
        return "Letter(%s)" % str(self)

    def __eq__(self, other):
        return (isinstance(other, Letter) and self.kind == other.kind
                and self.index == other.index and self.power == other.power)

    def __hash__(self):
        return hash((self.kind, self.index, self.power))


class MappingWord(object):
    """A composition of letters; leftmost letter is applied last."""

    def __init__(self, letters=()):
        self.letters = tuple(letters)

    @classmethod
    def parse(cls, text):
        return _parse_word(text)

    def __mul__(self, other):
        return MappingWord(self.letters + other.letters)

    def inverse(self):
        return MappingWord(tuple(l.inverse() for l in reversed(self.letters)))

    def __pow__(self, n):
        if n == 0:
            return MappingWord()
        base = self if n > 0 else self.inverse()
        return MappingWord(base.letters * abs(n))

    def atoms(self):
        """Letters expanded to unit exponent, in application order last-to-first.

        Yields (kind, index_expr_or_None, +1/-1) with the leftmost letter first;
        evaluators multiply in this order acting on column vectors.
        """
        for letter in self.letters:
            step = 1 if letter.power >= 0 else -1
            for _ in range(abs(letter.power)):
                yield (letter.kind, letter.index, step)

    def free_reduce(self):
        """Cancel adjacent mutually-inverse letters (syntactic only)."""
        out = []
        for letter in self.letters:
            if letter.power == 0:
                continue
            if out and out[-1].kind == letter.kind and out[-1].index == letter.index:
                power = out[-1].power + letter.power
                out.pop()
                if power:
                    out.append(out_letter(letter, power))
                continue
            out.append(letter)
        return MappingWord(out)

    def __len__(self):
        return sum(abs(l.power) for l in self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return "*".join(str(l) for l in self.letters)

    def __repr__(self):
        return "MappingWord(%s)" % str(self)

    def __eq__(self, other):
        return isinstance(other, MappingWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)


def out_letter(letter, power):
    return Letter(letter.kind, letter.index, power)


_TOKEN_RE = re.compile(r"""
    (?P<fam>[ABCE])\[(?P<idx>[^\]]+)\]
  | (?P<sym>[DSRT])
  | (?P<open>\()
  | (?P<close>\))
  | (?P<pow>\^(?P<exp>-?\d+))
  | (?P<star>\*)
  | (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise WordError("cannot tokenize %r at position %d" % (text, pos))
        pos = m.end()
        if m.lastgroup == "ws" or (m.lastgroup == "star"):
            if m.lastgroup == "star":
                yield ("*", None)
            continue
        if m.group("fam"):
            yield ("letter", Letter(m.group("fam"), IndexExpr.parse(m.group("idx"))))
        elif m.group("sym"):
            yield ("letter", Letter(m.group("sym")))
        elif m.group("open"):
            yield ("(", None)
        elif m.group("close"):
            yield (")", None)
        elif m.group("pow"):
            yield ("^", int(m.group("exp")))


def _parse_word(text):
    tokens = list(_tokenize(text))
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else (None, None)

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def parse_atom():
        kind, value = take()
        if kind == "letter":
            return MappingWord([value])
        if kind == "(":
            word = parse_chain()
            closer, _ = take()
            if closer != ")":
                raise WordError("unbalanced parenthesis in %r" % (text,))
            return word
        raise WordError("unexpected token in %r" % (text,))

    def parse_factor():
        atom = parse_atom()
        if peek()[0] == "^":
            _, exp = take()
            if len(atom.letters) == 1:
                return MappingWord([atom.letters[0].with_power(atom.letters[0].power * exp)])
            return atom ** exp
        return atom

    def parse_chain():
        word = parse_factor()
        while True:
            kind, _ = peek()
            if kind == "*":
                take()
                word = word * parse_factor()
            elif kind in ("letter", "("):
                # juxtaposition without '*' is tolerated
                word = word * parse_factor()
            else:
                return word

    if not tokens:
        return MappingWord()
    word = parse_chain()
    if pos[0] != len(tokens):
        raise WordError("trailing tokens in %r" % (text,))
    return word


def word(text):
    """Shorthand parser used throughout the test-suite and the CLI."""
    return MappingWord.parse(text)
