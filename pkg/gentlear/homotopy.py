# encoding: utf8

# Description {{{1
"""
Homotopy strings and homotopy bands.

Homotopy strings may contain relations; only backtracks are forbidden.
Composition follows its own rules: two positive length homotopy strings
compose across a relation (same direction, *Sω′ = Tω″*) or across a change
of direction (*Sω′ = −Tω″*), but never across an ordinary path junction.
Every homotopy string therefore splits uniquely into directed pieces, and
that decomposition drives everything downstream::

    >>> from gentlear import bundled, parse_homotopy_string
    >>> q2 = bundled('Q2')
    >>> w = parse_homotopy_string(q2, 'b a')
    >>> w.L, w.deg, [str(p) for p in w.pieces]
    (2, 2, ['b', 'a'])
    >>> print(w.prefix(0), w.suffix(2))
    1:(3,+) 1:(1,+)

"""

# MIT License {{{1
# Copyright (C) 2024-2026 The gentlear developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

# Imports {{{1
from collections import namedtuple
from .core import IdentityFailure, IndexOutOfRange, NotABand, WalkError
from .strings import (
    Letter, Walk, has_backtrack, parse_walk, simple_strings_from,
)


# HomotopyString {{{1
class HomotopyString(Walk):
    """A walk without backtracks, with its directed decomposition.

    The decomposition is computed on construction: :attr:`pieces` holds the
    directed pieces σ₁ … σ_L, :attr:`breaks` the letter offsets where
    the pieces end, and :attr:`degrees` the values deg ω^{[i]} for
    *i = 0 … L*.

    :raises WalkError(GentleError, ValueError):
        the walk contains a backtrack.
    """

    def __init__(self, quiver, letters=(), vertex=None, sign=None):
        super().__init__(quiver, letters, vertex, sign)
        if has_backtrack(self):
            raise WalkError('not a homotopy string', culprit=self._text())
        self.breaks = self._decompose()
        self.degrees = [0]
        start = 0
        for stop in self.breaks:
            step = -1 if self.letters[start].inverse else 1
            self.degrees.append(self.degrees[-1] + step)
            start = stop

    def _decompose(self):
        q = self.quiver
        letters = self.letters
        breaks = []
        for k in range(1, len(letters)):
            left, right = letters[k-1], letters[k]
            if left.inverse != right.inverse:
                breaks.append(k)
            elif not left.inverse and q.is_relation(left.arrow, right.arrow):
                breaks.append(k)
            elif left.inverse and q.is_relation(right.arrow, left.arrow):
                breaks.append(k)
        if letters:
            breaks.append(len(letters))
        return breaks

    # decomposition {{{2
    @property
    def L(self):
        return len(self.breaks)

    @property
    def deg(self):
        return self.degrees[-1]

    def piece_bounds(self, i):
        """Letter offsets *(start, stop)* of σ_i, counting from 1."""
        if not 1 <= i <= self.L:
            raise IndexOutOfRange(i, bound=self.L)
        start = self.breaks[i-2] if i > 1 else 0
        return start, self.breaks[i-1]

    def piece(self, i):
        start, stop = self.piece_bounds(i)
        return self._new(self.letters[start:stop])

    @property
    def pieces(self):
        return [self.piece(i) for i in range(1, self.L + 1)]

    def piece_is_path(self, i):
        """True if σ_i is a path, False if σ_i⁻¹ is one."""
        start, _ = self.piece_bounds(i)
        return not self.letters[start].inverse

    def prefix(self, i):
        """ω^{[i]}: the first *i* pieces."""
        if not 0 <= i <= self.L:
            raise IndexOutOfRange(i, bound=self.L)
        if i == 0:
            if self.letters and not self.letters[0].inverse:
                return self._new((), self.t, self.T)
            return self._new((), self.t, -self.T)
        return self._new(self.letters[:self.breaks[i-1]])

    def suffix(self, i):
        """^{[i]}ω: all pieces after the first *i*."""
        if not 0 <= i <= self.L:
            raise IndexOutOfRange(i, bound=self.L)
        if i == self.L:
            if self.letters and self.letters[-1].inverse:
                return self._new((), self.s, -self.S)
            return self._new((), self.s, self.S)
        if i == 0:
            return self
        return self._new(self.letters[self.breaks[i-1]:])

    def position_vertex(self, i):
        """The vertex s ω^{[i]}."""
        if i == 0:
            return self.t
        return self.letter_source(self.letters[self.breaks[i-1] - 1])

    def summand_data(self):
        """Pairs *(deg ω^{[i]}, s ω^{[i]})* for *i = 0 … L*."""
        return [(self.degrees[i], self.position_vertex(i)) for i in range(self.L + 1)]


def parse_homotopy_string(quiver, text):
    return parse_walk(quiver, text, cls=HomotopyString)


def as_homotopy_string(w):
    return w if isinstance(w, HomotopyString) else w.recast(HomotopyString)


def is_homotopy_string(w):
    return not has_backtrack(w)


def directed_decomposition(w):
    """Return *(L, [σ₁ … σ_L], [deg ω^{[0]} … deg ω^{[L]}])*."""
    w = as_homotopy_string(w)
    return w.L, w.pieces, list(w.degrees)


def prefix(w, i):
    return as_homotopy_string(w).prefix(i)


def suffix(w, i):
    return as_homotopy_string(w).suffix(i)


# hstring_compose {{{1
def hstring_compose(left, right):
    """Compose homotopy strings; *None* when the composition is undefined.

    >>> from gentlear import bundled, parse_homotopy_string, hstring_compose
    >>> q2 = bundled('Q2')
    >>> print(hstring_compose(parse_homotopy_string(q2, 'b'), parse_homotopy_string(q2, 'a')))
    b a

    """
    left = as_homotopy_string(left)
    right = as_homotopy_string(right)
    if left.is_trivial and right.is_trivial:
        return left if left == right else None
    if right.is_trivial:
        last = left.letters[-1]
        if right.vertex != left.s:
            return None
        wanted = -left.S if last.inverse else left.S
        return left if right.sign == wanted else None
    if left.is_trivial:
        first = right.letters[0]
        if left.vertex != right.t:
            return None
        wanted = -right.T if first.inverse else right.T
        return right if left.sign == wanted else None
    if left.s != right.t:
        return None
    same = left.letters[-1].inverse == right.letters[0].inverse
    if same and left.S != right.T:
        return None
    if not same and left.S != -right.T:
        return None
    result = left.concat(right)
    if has_backtrack(result):
        return None
    return result


def hcompose(*walks):
    """Compose several homotopy strings; *None* propagates."""
    result = walks[0]
    for w in walks[1:]:
        if result is None:
            return None
        result = hstring_compose(result, w)
    return result


# sigma_omega {{{1
def sigma_omega(w):
    """σ_ω: the longest simple string σ for which σω is defined.

    >>> from gentlear import bundled, parse_homotopy_string, sigma_omega
    >>> print(sigma_omega(parse_homotopy_string(bundled('Q2'), 'a')))
    b

    """
    w = as_homotopy_string(w)
    head = w.prefix(0)
    candidates = simple_strings_from(w.quiver, head.vertex, head.sign, HomotopyString)
    return candidates[-1]


# antipaths {{{1
def antipaths(quiver, x, eps):
    """Θ_{x,ε} in increasing length.

    Returns *None* when Θ_{x,ε} is infinite (an antipath would have to repeat
    an arrow more than once around a cycle of relations).
    """
    result = [HomotopyString(quiver, (), x, -eps)]
    first = [a for a in quiver.arrows_to(x) if quiver.T(a) == eps]
    bound = len(quiver.arrows)
    for a in first:
        path = [a]
        while True:
            result.append(HomotopyString.of_arrows(quiver, path))
            if len(path) > bound:
                return None
            following = [
                b for b in quiver.arrows_to(quiver.source(path[-1]))
                if quiver.is_relation(path[-1], b)
            ]
            if not following:
                break
            path.append(following[0])
    return result


def theta_max(quiver, x, eps):
    """θ_{x,ε}: the longest antipath into *(x, ε)*, or *None*.

    >>> from gentlear import bundled, theta_max
    >>> print(theta_max(bundled('Q2'), '3', 1))
    b a

    """
    found = antipaths(quiver, x, eps)
    if found is None:
        return None
    top = max(len(t) for t in found)
    best = [t for t in found if len(t) == top]
    if len(best) != 1:
        return None
    return best[0]


def is_antipath(w):
    q = w.quiver
    if w.is_trivial:
        return True
    if not w.is_direct:
        return False
    return all(q.is_relation(a, b) for a, b in zip(w.arrows, w.arrows[1:]))


# bands {{{1
RotationResult = namedtuple('RotationResult', 'walk is_band')


def _is_proper_power(w):
    n = len(w.letters)
    for d in range(1, n):
        if n % d == 0 and w.letters[:d] * (n // d) == w.letters:
            return True
    return False


def is_homotopy_band(w):
    """Check the homotopy band conditions.

    >>> from gentlear import bundled, parse_homotopy_string, is_homotopy_band
    >>> is_homotopy_band(parse_homotopy_string(bundled('Q3'), 'a b-'))
    True

    """
    w = as_homotopy_string(w)
    if w.L == 0 or w.deg != 0:
        return False
    if w.piece_is_path(1) == w.piece_is_path(w.L):
        return False
    if w.s != w.t or w.S != -w.T:
        return False
    return not _is_proper_power(w)


def require_band(w):
    if not is_homotopy_band(w):
        raise NotABand(str(w))
    return as_homotopy_string(w)


def rotate(w, i):
    """ω^{(i)} = ^{[i]}ω · ω^{[i]}, with a flag saying whether it is a band.

    :raises IndexOutOfRange(GentleError, IndexError):
        *i* lies outside *0 … L − 1*.
    """
    w = as_homotopy_string(w)
    if w.L == 0:
        raise WalkError('cannot rotate a trivial walk', culprit=str(w))
    if not 0 <= i < w.L:
        raise IndexOutOfRange(i, bound=w.L - 1)
    rotated = hstring_compose(w.suffix(i), w.prefix(i))
    if rotated is None:
        return RotationResult(None, False)
    return RotationResult(rotated, is_homotopy_band(rotated))


def band_rotations(w):
    """Rotations of *w* that are again homotopy bands."""
    w = as_homotopy_string(w)
    found = []
    for i in range(w.L):
        rotated, ok = rotate(w, i)
        if ok and rotated not in found:
            found.append(rotated)
    return found


def canonical_band(w):
    """Least rotation of the band or of its inverse."""
    w = require_band(w)
    candidates = band_rotations(w) + band_rotations(w.inverse())
    return min(candidates, key=lambda b: b.sort_key())


# enumeration {{{1
def _letters_into(quiver, vertex):
    letters = [Letter(a, False) for a in quiver.arrows_to(vertex)]
    letters += [Letter(a, True) for a in quiver.arrows_from(vertex)]
    return sorted(letters, key=lambda l: (quiver.arrow_key(l.arrow), l.inverse))


def enumerate_homotopy_strings(quiver, max_len):
    """Yield every homotopy string of length at most *max_len*.

    Length first, then lexicographic by arrow order (arrows before their
    inverses).

    >>> from gentlear import bundled, enumerate_homotopy_strings
    >>> [str(w) for w in enumerate_homotopy_strings(bundled('Q1'), 1)]
    ['1:(1,+)', '1:(1,-)', '1:(2,+)', '1:(2,-)', 'a', 'a-']

    """
    for v in quiver.vertices:
        for eps in (1, -1):
            yield HomotopyString(quiver, (), v, eps)
    layer = [()]
    for length in range(1, max_len + 1):
        longer = []
        for letters in layer:
            if letters:
                last = letters[-1]
                vertex = quiver.target(last.arrow) if last.inverse else quiver.source(last.arrow)
                options = _letters_into(quiver, vertex)
            else:
                options = sorted(
                    [Letter(a, False) for a in quiver.arrows] + [Letter(a, True) for a in quiver.arrows],
                    key=lambda l: (quiver.arrow_key(l.arrow), l.inverse),
                )
            for l in options:
                if letters and letters[-1].arrow == l.arrow and letters[-1].inverse != l.inverse:
                    continue
                longer.append(letters + (l,))
        walks = sorted(
            (HomotopyString(quiver, letters) for letters in longer),
            key=lambda w: w.sort_key(),
        )
        yield from walks
        layer = [w.letters for w in walks]


def enumerate_homotopy_bands(quiver, max_len):
    """Canonical homotopy bands of length at most *max_len*, deduplicated."""
    seen = set()
    bands = []
    for w in enumerate_homotopy_strings(quiver, max_len):
        if w.letters and is_homotopy_band(w):
            canonical = canonical_band(w)
            if canonical not in seen:
                seen.add(canonical)
                bands.append(canonical)
    return bands


def check_homotopy_identities(w):
    """Raise :class:`IdentityFailure` unless the basic identities hold for *w*."""
    w = as_homotopy_string(w)
    inverse = as_homotopy_string(w.inverse())
    if inverse.deg != -w.deg or inverse.L != w.L:
        raise IdentityFailure('inversion changes L or deg', culprit=str(w))
    for i in range(w.L + 1):
        if hstring_compose(w.prefix(i), w.suffix(i)) != w:
            raise IdentityFailure(f'prefix and suffix at {i} do not recompose', culprit=str(w))
    return True
