"""Iwahori-Hecke algebra elements over a parabolic of the fixed ADE type.

An element is a finite Scalar-linear combination of basis elements T_w with
w running over the parabolic subgroup generated by a ``parent`` node set.
Two parents matter in practice: the full node set (the evaluation oracle for
Artin words) and the set C orthogonal to the highest root (the coefficient
algebra of the Lawrence-Krammer module, whose generators are written z_j).

The basis is normalized so that T_s = z_s satisfies z^2 = 1 - m z, hence
z^-1 = z + m, and products follow T_w T_s = T_{ws} when l(ws) > l(w) and
T_{ws} - m T_w otherwise.  Length comparisons reduce to a sign test on the
stored image of alpha_s, so no word minimization is ever needed during
multiplication.  The parabolic W_C is never enumerated: only elements that
actually arise are materialized, which keeps E7-sized coefficient algebras
usable.

Elements are immutable; all operations return fresh values.
"""

from __future__ import annotations

from .rootsys import RootSystem, Weyl, _is_negative
from .scalar import Scalar

_M = Scalar.m()


class ParabolicError(ValueError):
    """A basis element fell outside the requested parabolic subgroup."""

    def __init__(self, message: str, word=None):
        super().__init__(message)
        self.word = word


def in_parabolic(rs: RootSystem, w: Weyl, nodes: frozenset) -> bool:
    """Whether w lies in the standard parabolic generated by ``nodes``.

    Strips right descents that belong to the node set; membership holds
    exactly when this reaches the identity.
    """
    cur = w
    while cur != rs.identity:
        for i in nodes:
            if _is_negative(cur[i - 1]):
                cur = rs.right_mul_simple(cur, i)
                break
        else:
            return False
    return True


class HeckeElement:
    __slots__ = ("rs", "parent", "terms")

    def __init__(self, rs: RootSystem, parent: frozenset, terms: dict | None = None):
        self.rs = rs
        self.parent = parent
        self.terms: dict[Weyl, Scalar] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(rs: RootSystem, parent: frozenset) -> HeckeElement:
        return HeckeElement(rs, parent)

    @staticmethod
    def unit(rs: RootSystem, parent: frozenset) -> HeckeElement:
        return HeckeElement(rs, parent, {rs.identity: Scalar.one()})

    @staticmethod
    def basis(rs: RootSystem, parent: frozenset, w: Weyl) -> HeckeElement:
        if not in_parabolic(rs, w, parent):
            raise ParabolicError(
                f"element {rs.reduced_word(w)} is not in the parabolic on {sorted(parent)}",
                rs.reduced_word(w),
            )
        return HeckeElement(rs, parent, {w: Scalar.one()})

    @staticmethod
    def generator(rs: RootSystem, parent: frozenset, j: int) -> HeckeElement:
        return HeckeElement.basis(rs, parent, rs.simple_reflection(j))

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_l_free(self) -> bool:
        return all(c.is_l_free() for c in self.terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):  # pragma: no cover - elements are not used as keys
        return hash(tuple(sorted(self.terms.keys())))

    def _check_parent(self, other: HeckeElement):
        if self.parent != other.parent or self.rs is not other.rs:
            raise ParabolicError("parent parabolic mismatch")

    # -- module operations ---------------------------------------------------

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check_parent(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            terms[w] = c if s is None else s + c
        return HeckeElement(self.rs, self.parent, terms)

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.rs, self.parent, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, s: Scalar) -> HeckeElement:
        if not s:
            return HeckeElement(self.rs, self.parent)
        return HeckeElement(self.rs, self.parent, {w: c * s for w, c in self.terms.items()})

    def __rmul__(self, s: Scalar) -> HeckeElement:
        if isinstance(s, Scalar):
            return self.scale(s)
        return NotImplemented

    # -- ring operations -------------------------------------------------------

    def mul_generator(self, j: int, inverse: bool = False) -> HeckeElement:
        """Right multiplication by z_j, or by z_j^-1 = z_j + m."""
        rs = self.rs
        terms: dict[Weyl, Scalar] = {}

        def _acc(w, c):
            s = terms.get(w)
            terms[w] = c if s is None else s + c

        for w, c in self.terms.items():
            ws = rs.right_mul_simple(w, j)
            _acc(ws, c)
            descent = _is_negative(w[j - 1])
            if descent and not inverse:
                _acc(w, -(_M * c))
            elif inverse and not descent:
                _acc(w, _M * c)
        return HeckeElement(rs, self.parent, terms)

    def mul_word(self, word, sign: int = 1) -> HeckeElement:
        out = self
        if sign > 0:
            for j in word:
                out = out.mul_generator(j)
        else:
            for j in reversed(tuple(word)):
                out = out.mul_generator(j, inverse=True)
        return out

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_parent(other)
        rs = self.rs
        acc = HeckeElement(rs, self.parent)
        for w, c in other.terms.items():
            acc = acc + self.mul_word(rs.reduced_word(w)).scale(c)
        return acc

    # -- named operations ----------------------------------------------------------

    def project_subalgebra(self, nodes) -> HeckeElement:
        """Re-parent onto a sub-parabolic, or fail naming the offender."""
        nodes = frozenset(nodes)
        for w in self.terms:
            if not in_parabolic(self.rs, w, nodes):
                raise ParabolicError(
                    f"basis element {self.rs.reduced_word(w)} lies outside "
                    f"the parabolic on {sorted(nodes)}",
                    self.rs.reduced_word(w),
                )
        return HeckeElement(self.rs, nodes, dict(self.terms))

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        rs = self.rs
        return sorted(
            self.terms.items(), key=lambda kv: (len(rs.reduced_word(kv[0])), rs.reduced_word(kv[0]))
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = self.rs.reduced_word(w)
            basis = "1" if not word else "z" + "*z".join(str(j) for j in word)
            parts.append(f"({c!r})*{basis}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"word": list(self.rs.reduced_word(w)), "coeff": c.to_json_dict()}
                for w, c in self.sorted_terms()
            ]
        }

    @staticmethod
    def from_json_dict(rs: RootSystem, parent: frozenset, data: dict) -> HeckeElement:
        terms = {}
        for t in data["terms"]:
            w = rs.word_element(t["word"])
            terms[w] = Scalar.from_json_dict(t["coeff"])
        return HeckeElement(rs, parent, terms)


def eval_signed_word(rs: RootSystem, parent: frozenset, word) -> HeckeElement:
    """Evaluate a signed Artin word left to right.

    Each (j, +1) contributes z_j and each (j, -1) contributes z_j + m, the
    inverse of z_j in the Hecke algebra.
    """
    parent = frozenset(parent)
    out = HeckeElement.unit(rs, parent)
    for j, sign in word:
        if j not in parent:
            raise ParabolicError(f"node {j} is not in the parent parabolic")
        out = out.mul_generator(j, inverse=(sign < 0))
    return out
