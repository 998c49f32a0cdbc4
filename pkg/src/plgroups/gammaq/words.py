"""Words over xi, diagonal F_eta atoms and formal commutators.

A word ``a_1 a_2 ... a_k`` acts on the right: ``a_1`` is applied first.
``COMM(u, v)`` stands for ``u^-1 v^-1 u v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ..errors import NotInFEta, ParseError
from ..exact import format_rational, parse_rational
from ..plmap import CompactPL, PeriodicPL
from ..thompson import member_Fn
from .membership import eta, xi_build


@dataclass(frozen=True)
class Xi:
    sign: int = 1

    def inverse(self) -> "Xi":
        return Xi(-self.sign)


@dataclass(frozen=True)
class FAtom:
    map: CompactPL

    def inverse(self) -> "FAtom":
        return FAtom(self.map.inverse())


@dataclass(frozen=True)
class Comm:
    left: "Word"
    right: "Word"

    def inverse(self) -> "Comm":
        return Comm(self.right, self.left)


Atom = Union[Xi, FAtom, Comm]


@dataclass(frozen=True)
class Word:
    atoms: tuple = ()
    base_n: int = 2

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    @classmethod
    def of(cls, n: int, *atoms) -> "Word":
        return cls(tuple(atoms), n)

    def __len__(self) -> int:
        return len(self.atoms)

    def __add__(self, other: "Word") -> "Word":
        if other.base_n != self.base_n:
            raise ValueError("words over different bases")
        return Word(self.atoms + other.atoms, self.base_n)

    def inverse(self) -> "Word":
        return Word(tuple(a.inverse() for a in reversed(self.atoms)), self.base_n)

    def is_q_certified(self) -> bool:
        """Every top-level atom is a formal commutator."""
        return all(isinstance(a, Comm) for a in self.atoms)

    def evaluate(self) -> PeriodicPL:
        return _evaluate(self)

    def simplified(self) -> "Word":
        """Merge adjacent F atoms, cancel ``XI XI'`` pairs and drop identities."""
        out: list = []
        for a in self.atoms:
            if isinstance(a, FAtom) and a.map.is_identity():
                continue
            if out and isinstance(a, FAtom) and isinstance(out[-1], FAtom):
                m = out.pop().map.then(a.map)
                if not m.is_identity():
                    out.append(FAtom(m))
                continue
            if out and isinstance(a, Xi) and isinstance(out[-1], Xi) and out[-1].sign == -a.sign:
                out.pop()
                continue
            out.append(a)
        return Word(tuple(out), self.base_n)

    def __str__(self):
        return format_word(self)


def _atom_map(atom, n: int) -> PeriodicPL:
    if isinstance(atom, Xi):
        xi = xi_build(n).map
        return xi if atom.sign > 0 else xi.inverse()
    if isinstance(atom, FAtom):
        return PeriodicPL(atom.map.points)
    a = _evaluate(atom.left)
    b = _evaluate(atom.right)
    return a.inverse().then(b.inverse()).then(a).then(b)


@lru_cache(maxsize=4096)
def _evaluate(word: Word) -> PeriodicPL:
    out = PeriodicPL.identity()
    for atom in word.atoms:
        out = out.then(_atom_map(atom, word.base_n))
    return out


def xi_word(n: int, sign: int = 1) -> Word:
    return Word((Xi(sign),), n)


def f_word(f: CompactPL, n: int) -> Word:
    return Word((FAtom(f),), n)


def comm_word(u: Word, v: Word) -> Word:
    return Word((Comm(u, v),), u.base_n)


# ----------------------------------------------------------------------
# text form


def _format_atom(atom) -> str:
    if isinstance(atom, Xi):
        return "XI" if atom.sign > 0 else "XI'"
    if isinstance(atom, FAtom):
        body = ";".join(f"{format_rational(x)} {format_rational(y)}" for x, y in atom.map.points)
        return "F{" + body + "}"
    return f"COMM({_format_body(atom.left)},{_format_body(atom.right)})"


def _format_body(word: Word) -> str:
    if not word.atoms:
        return "id"
    return " ".join(_format_atom(a) for a in word.atoms)


def format_word(word: Word) -> str:
    return _format_body(word)


def dumps_word(word: Word) -> str:
    return f"word n={word.base_n}\n{_format_body(word)}\n"


class _Parser:
    def __init__(self, text: str, n: int):
        self.s = text
        self.i = 0
        self.n = n

    def _ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def _peek(self, tok: str) -> bool:
        self._ws()
        return self.s.startswith(tok, self.i)

    def _take(self, tok: str):
        if not self._peek(tok):
            raise ParseError(f"expected {tok!r} at offset {self.i}")
        self.i += len(tok)

    def word(self, stops: str) -> Word:
        atoms = []
        self._ws()
        if self._peek("id"):
            self._take("id")
            return Word((), self.n)
        while True:
            self._ws()
            if self.i >= len(self.s) or self.s[self.i] in stops:
                return Word(tuple(atoms), self.n)
            atoms.append(self.atom())

    def atom(self):
        if self._peek("XI'"):
            self._take("XI'")
            return Xi(-1)
        if self._peek("XI"):
            self._take("XI")
            return Xi(1)
        if self._peek("F{"):
            self._take("F{")
            j = self.s.find("}", self.i)
            if j < 0:
                raise ParseError("unterminated F atom")
            pts = []
            for pair in self.s[self.i : j].split(";"):
                fields = pair.split()
                if len(fields) != 2:
                    raise ParseError(f"bad point {pair!r}")
                pts.append((parse_rational(fields[0]), parse_rational(fields[1])))
            self.i = j + 1
            f = CompactPL(pts)
            if not member_Fn(f, eta(self.n)):
                raise NotInFEta(f"F atom is not in F_{eta(self.n)}")
            return FAtom(f)
        if self._peek("COMM("):
            self._take("COMM(")
            u = self.word(",")
            self._take(",")
            v = self.word(")")
            self._take(")")
            return Comm(u, v)
        raise ParseError(f"unexpected input at offset {self.i}: {self.s[self.i:self.i + 10]!r}")


def parse_word(body: str, n: int) -> Word:
    p = _Parser(body, n)
    w = p.word("")
    p._ws()
    if p.i != len(p.s):
        raise ParseError(f"trailing input at offset {p.i}")
    return w


def loads_word(text: str) -> Word:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("word"):
        raise ParseError("expected 'word n=<int>' header")
    head = lines[0].split()
    try:
        n = int(head[1].split("=", 1)[1])
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    return parse_word(" ".join(lines[1:]) or "id", n)


def point_images(word: Word, xs) -> list[Fraction]:
    f = word.evaluate()
    return [f.evaluate(x) for x in xs]
