"""Free words over the algebra generators and the length-reducing rewrite engine.

A word is a tuple of letters (node, kind) with kind one of "g" (generator),
"G" (inverse generator), "e".  A combination maps words to Scalar
coefficients.  ``reduce_word`` rewrites any input into a combination whose
words all have length at most |Phi+|:

* inverse letters are eliminated first through g^-1 = g + m - m e;
* the oriented length-reducing rules are the defining relations (squares,
  mixed same-index pairs) together with the three-letter identities on
  adjacent indices (e a e, e e e, e e g, g e e, g g e, e g g windows);
* to expose a redex, a word is searched breadth-first under the exact
  length-preserving moves: commutation of letters on non-adjacent nodes,
  the braid move on g g g windows, and the g e g crossing, which is length
  preserving up to explicitly tracked shorter side terms.

The rewriting is not confluent and is never used to decide equality; words
that admit no reachable redex are only normalized to the lexicographically
least form in their move orbit.  Equality of combinations is decided by
``rep_image``, the pair of a Hecke-quotient image (every e goes to zero) and
the Lawrence-Krammer matrix image, which is invariant under every rule used
here.  Termination follows from the strictly decreasing (length multiset,
word) measure; the orbit search is capped and raises if the cap is ever hit.
"""

from __future__ import annotations

from collections import deque

from .hecke import HeckeElement
from .lkrep import LawrenceKrammer, SparseMatrix
from .rootsys import RootSystem
from .scalar import Scalar, x_value

Letter = tuple  # (node, kind)
BmwWord = tuple  # tuple[Letter, ...]

_M = Scalar.m()
_L = Scalar.l(1)
_L_INV = Scalar.l(-1)
_ONE = Scalar.one()
_X = x_value()

_SEARCH_CAP = 500_000


class WordParseError(ValueError):
    pass


def parse_word(rs: RootSystem, text: str) -> BmwWord:
    """Parse whitespace-separated tokens g<i>, G<i> (inverse), e<i>."""
    letters = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        kind = token[0]
        if kind not in "gGe" or not token[1:].isdigit():
            raise WordParseError(f"bad token {token!r} at position {pos}")
        node = int(token[1:])
        if node not in rs.nodes:
            raise WordParseError(f"node {node} out of range at position {pos}")
        letters.append((node, kind))
        pos += len(token)
    return tuple(letters)


def word_to_text(word: BmwWord) -> str:
    return " ".join(f"{kind}{node}" for node, kind in word)


def _combine(acc: dict, word: BmwWord, coeff: Scalar):
    cur = acc.get(word)
    total = coeff if cur is None else cur + coeff
    if total:
        acc[word] = total
    else:
        acc.pop(word, None)


def _expand_inverses(word: BmwWord) -> dict:
    """Eliminate G letters via g^-1 = g + m - m e."""
    comb = {(): _ONE}
    for node, kind in word:
        if kind != "G":
            comb = {w + ((node, kind),): c for w, c in comb.items()}
            continue
        out: dict[BmwWord, Scalar] = {}
        for w, c in comb.items():
            _combine(out, w + ((node, "g"),), c)
            _combine(out, w, c * _M)
            _combine(out, w + ((node, "e"),), -(c * _M))
        comb = out
    return comb


def _redex_at(rs: RootSystem, word: BmwWord, p: int):
    """Replacement combination for the window starting at p, if any."""
    a, ka = word[p]
    if p + 1 < len(word):
        b, kb = word[p + 1]
        if a == b:
            if ka == "g" and kb == "g":
                return 2, {(): _ONE, ((a, "g"),): -_M, ((a, "e"),): _M * _L_INV}
            if ka == "e" and kb == "e":
                return 2, {((a, "e"),): _X}
            return 2, {((a, "e"),): _L_INV}
    if p + 2 < len(word):
        c, kc = word[p + 2]
        b, kb = word[p + 1]
        if a == c and b in rs.neighbors[a]:
            pat = ka + kb + kc
            if pat == "ege":
                return 3, {((a, "e"),): _L}
            if pat == "eee":
                return 3, {((a, "e"),): _ONE}
            if pat == "eeg":
                return 3, {
                    ((a, "e"), (b, "g")): _ONE,
                    ((a, "e"),): _M,
                    ((a, "e"), (b, "e")): -_M,
                }
            if pat == "gee":
                return 3, {
                    ((b, "g"), (a, "e")): _ONE,
                    ((a, "e"),): _M,
                    ((b, "e"), (a, "e")): -_M,
                }
            if pat == "gge":
                return 3, {((b, "e"), (a, "e")): _ONE}
            if pat == "egg":
                return 3, {((a, "e"), (b, "e")): _ONE}
    return None


def _find_redex(rs: RootSystem, word: BmwWord):
    for p in range(len(word)):
        hit = _redex_at(rs, word, p)
        if hit is not None:
            return p, hit[0], hit[1]
    return None


def _neighbors(rs: RootSystem, word: BmwWord):
    """Exact length-preserving moves; c-moves carry their side terms."""
    for p in range(len(word) - 1):
        a, _ = word[p]
        b, _ = word[p + 1]
        if a != b and b not in rs.neighbors[a]:
            yield word[:p] + (word[p + 1], word[p]) + word[p + 2 :], ()
    for p in range(len(word) - 2):
        a, ka = word[p]
        b, kb = word[p + 1]
        c, kc = word[p + 2]
        if a != c or b not in rs.neighbors[a]:
            continue
        if ka == kb == kc == "g":
            yield word[:p] + ((b, "g"), (a, "g"), (b, "g")) + word[p + 3 :], ()
        elif ka == "g" and kb == "e" and kc == "g":
            # g_a e_b g_a = g_b e_a g_b + m(e_a g_b - e_b g_a + g_b e_a - g_a e_b)
            #             + m^2 (e_a - e_b)
            main = word[:p] + ((b, "g"), (a, "e"), (b, "g")) + word[p + 3 :]
            side = (
                (word[:p] + ((a, "e"), (b, "g")) + word[p + 3 :], _M),
                (word[:p] + ((b, "e"), (a, "g")) + word[p + 3 :], -_M),
                (word[:p] + ((b, "g"), (a, "e")) + word[p + 3 :], _M),
                (word[:p] + ((a, "g"), (b, "e")) + word[p + 3 :], -_M),
                (word[:p] + ((a, "e"),) + word[p + 3 :], _M * _M),
                (word[:p] + ((b, "e"),) + word[p + 3 :], -(_M * _M)),
            )
            yield main, side


def _search(rs: RootSystem, word: BmwWord):
    """Explore the move orbit of a word.

    Returns ("redex", found_word, window, side) when some reachable word has
    a reducible window, else ("canonical", least_word, side); ``side`` lists
    the (word, coeff) debts of the c-moves used to reach the result.
    """
    start = (word, ())
    seen = {word: ()}
    queue = deque([start])
    while queue:
        cur, side = queue.popleft()
        hit = _find_redex(rs, cur)
        if hit is not None:
            return "redex", cur, hit, side
        if len(seen) > _SEARCH_CAP:
            raise RuntimeError(f"orbit search cap exceeded on a word of length {len(cur)}")
        for nxt, extra in _neighbors(rs, cur):
            if nxt not in seen:
                nset = side + extra
                seen[nxt] = nset
                queue.append((nxt, nset))
    best = min(seen)
    return "canonical", best, None, seen[best]


def reduce_word(rs: RootSystem, word: BmwWord) -> dict:
    """Rewrite a word into a combination of words of length <= |Phi+|."""
    comb = _expand_inverses(word)
    done: set[BmwWord] = set()
    while True:
        todo = [w for w in comb if w and w not in done]
        if not todo:
            break
        w = max(todo, key=lambda t: (len(t), t))
        coeff = comb.pop(w)
        kind, target, hit, side = _search(rs, w)
        for extra_word, extra_coeff in side:
            _combine(comb, extra_word, coeff * extra_coeff)
        if kind == "redex":
            p, width, repl = hit
            for frag, c in repl.items():
                _combine(comb, target[:p] + frag + target[p + width :], coeff * c)
        else:
            _combine(comb, target, coeff)
            done.add(target)
    return comb


def reduce_combination(rs: RootSystem, comb: dict) -> dict:
    out: dict[BmwWord, Scalar] = {}
    for w, c in comb.items():
        for rw, rc in reduce_word(rs, w).items():
            _combine(out, rw, c * rc)
    return out


def rep_image_word(lk: LawrenceKrammer, word: BmwWord) -> tuple[HeckeElement, SparseMatrix]:
    """Image of a single word in the Hecke quotient and in the LK module."""
    rs = lk.rs
    hecke = HeckeElement.unit(rs, lk.full_set)
    for node, kind in word:
        if kind == "e":
            hecke = HeckeElement.zero(rs, lk.full_set)
            break
        hecke = hecke.mul_generator(node, inverse=(kind == "G"))
    mat = lk.identity_matrix()
    for node, kind in word:
        if kind == "g":
            mat = mat * lk.sigma(node)
        elif kind == "G":
            mat = mat * lk.sigma_inv(node)
        else:
            mat = mat * lk.e_matrix(node)
    return hecke, mat


def rep_image(lk: LawrenceKrammer, comb: dict) -> tuple[HeckeElement, SparseMatrix]:
    """Linear extension of the image pair to a combination."""
    hecke = HeckeElement.zero(lk.rs, lk.full_set)
    mat = SparseMatrix(lk.size)
    for word, coeff in comb.items():
        h, mw = rep_image_word(lk, word)
        hecke = hecke + h.scale(coeff)
        mat = mat + mw.map_entries(lambda v: v.scale(coeff))
    return hecke, mat
