# encoding: utf8

# Description {{{1
"""
The repetitive quiver of a gentle quiver and the string calculus on it.

The repetitive quiver has a copy *x[m]* of every vertex in every layer *m*,
a copy *α[m]* of every arrow, and a dual arrow *σ*[m] : (tσ)[m+1] → (sσ)[m]*
for every maximal path *σ*.  It is infinite, so :class:`RepQuiver` computes
its incidence from formulas and only uses its *window* of layers to bound
enumerations; operations that wander outside the window raise
:class:`WindowExhausted` and :func:`widening` retries them in a wider one::

    >>> from gentlear import bundled, RepQuiver, parse_hat_string, Delta
    >>> rq = RepQuiver(bundled('Q1'), window=(-4, 4))
    >>> print(Delta(parse_hat_string(rq, '1:(2[0],+)')))
    a*[0]
    >>> print(rq.chosen_full_path(rq.vertex('1', 0)))
    a*[-1] a[0]

Strings on the repetitive quiver avoid the relations *ẐR* and every full
path; their composition is the one of ordinary strings.
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
import re
from collections import namedtuple
from functools import cached_property, lru_cache
from inform import narrate
from .core import (
    IdentityFailure, NotABand, Settings, WalkError, WindowExhausted,
)
from .quiver import (
    GentleReport, Path, check_almost_gentle, check_string_functions,
)
from .strings import (
    Letter, Walk, alpha_prime, compose_all, direction_runs, is_band,
    is_string, parse_walk, sigma, sigma_prime, string_compose, substring_s,
    substring_t,
)


# Globals {{{1
_HAT_ARROW = re.compile(r"^(?P<name>[\w'.]+)(?P<star>\*)?\[(?P<layer>-?\d+)\]$")
_HAT_VERTEX = re.compile(r"^(?P<name>[\w']+)\[(?P<layer>-?\d+)\]$")


# HatVertex and HatArrow {{{1
class HatVertex(namedtuple('HatVertex', 'vertex layer')):
    """The vertex *x[m]*."""
    __slots__ = ()

    def __str__(self):
        return f'{self.vertex}[{self.layer}]'


class HatArrow(namedtuple('HatArrow', 'base layer dual')):
    """The arrow *α[m]*, or the dual arrow *σ*[m]* of a maximal path.

    For a dual arrow *base* is the tuple of arrows of the maximal path.
    """
    __slots__ = ()

    def __str__(self):
        if self.dual:
            return f"{'.'.join(self.base)}*[{self.layer}]"
        return f'{self.base}[{self.layer}]'


# RepQuiver {{{1
class RepQuiver:
    """The windowed repetitive quiver of a gentle quiver.

    :arg base: the gentle :class:`~gentlear.BoundQuiver`.
    :arg window:
        Pair *(m₀, m₁)* of the lowest and highest layer that may be visited.
        By default the window reaches *max_len + |Γ₁| + margin* layers to
        either side of layer 0.
    """

    def __init__(self, base, window=None):
        self.base = base
        if window is None:
            reach = Settings.get_pref('max_len') + len(base.arrows) + Settings.get_pref('margin')
            window = (-reach, reach)
        self.window = tuple(window)
        self.name = f'{base.name or "quiver"}^'
        self.maximal = tuple(p.arrows for p in base.maximal_paths())
        self._maximal_index = {sigma: i for i, sigma in enumerate(self.maximal)}

    def __repr__(self):
        return f'RepQuiver({self.base.name or "?"}, window={self.window})'

    def widened(self, factor=2):
        lo, hi = self.window
        return RepQuiver(self.base, (lo * factor - 1, hi * factor + 1))

    def _require(self, layer):
        lo, hi = self.window
        if not lo <= layer <= hi:
            raise WindowExhausted(needed=layer, window=f'[{lo}, {hi}]')

    # construction helpers {{{2
    def vertex(self, x, layer):
        return HatVertex(x, layer)

    def arrow(self, a, layer):
        return HatArrow(a, layer, False)

    def dual(self, sigma, layer):
        return HatArrow(tuple(sigma), layer, True)

    def _path_target(self, sigma):
        return self.base.target(sigma[0])

    def _path_source(self, sigma):
        return self.base.source(sigma[-1])

    # incidence {{{2
    def source(self, beta):
        if beta.dual:
            return HatVertex(self._path_target(beta.base), beta.layer + 1)
        return HatVertex(self.base.source(beta.base), beta.layer)

    def target(self, beta):
        if beta.dual:
            return HatVertex(self._path_source(beta.base), beta.layer)
        return HatVertex(self.base.target(beta.base), beta.layer)

    def arrows_from(self, y):
        self._require(y.layer)
        found = [HatArrow(a, y.layer, False) for a in self.base.arrows_from(y.vertex)]
        found += [
            HatArrow(sigma, y.layer - 1, True) for sigma in self.maximal
            if self._path_target(sigma) == y.vertex
        ]
        return tuple(found)

    def arrows_to(self, y):
        self._require(y.layer)
        found = [HatArrow(a, y.layer, False) for a in self.base.arrows_to(y.vertex)]
        found += [
            HatArrow(sigma, y.layer, True) for sigma in self.maximal
            if self._path_source(sigma) == y.vertex
        ]
        return tuple(found)

    @property
    def vertices(self):
        lo, hi = self.window
        return tuple(HatVertex(x, m) for m in range(lo, hi + 1) for x in self.base.vertices)

    @property
    def arrows(self):
        lo, hi = self.window
        found = [HatArrow(a, m, False) for m in range(lo, hi + 1) for a in self.base.arrows]
        found += [HatArrow(s, m, True) for m in range(lo, hi) for s in self.maximal]
        return tuple(sorted(found, key=self.arrow_key))

    def interior_arrows(self):
        """Arrows whose neighbourhood lies inside the window."""
        lo, hi = self.window
        return tuple(b for b in self.arrows if lo < b.layer < hi - 1)

    def has_arrow(self, beta):
        if not isinstance(beta, HatArrow):
            return False
        if beta.dual:
            return beta.base in self._maximal_index
        return self.base.has_arrow(beta.base)

    def has_vertex(self, y):
        return isinstance(y, HatVertex) and self.base.has_vertex(y.vertex)

    def arrow_key(self, beta):
        index = self._maximal_index[beta.base] if beta.dual else self.base.arrow_key(beta.base)
        return (beta.layer, beta.dual, index)

    def vertex_key(self, y):
        return (y.layer, self.base.vertex_key(y.vertex))

    def arrow_name(self, beta):
        return str(beta)

    # parsing {{{2
    def parse_arrow(self, name):
        """Read ``a[0]`` or ``b.a*[-1]``.

        :raises WalkError(GentleError, ValueError): unknown or malformed arrow.
        """
        match = _HAT_ARROW.match(name)
        if not match:
            raise WalkError('malformed arrow', culprit=name)
        layer = int(match.group('layer'))
        if match.group('star'):
            beta = HatArrow(tuple(match.group('name').split('.')), layer, True)
        else:
            beta = HatArrow(match.group('name'), layer, False)
        if not self.has_arrow(beta):
            raise WalkError('unknown arrow', culprit=name)
        return beta

    def parse_vertex(self, name):
        match = _HAT_VERTEX.match(name)
        if not match or not self.base.has_vertex(match.group('name')):
            raise WalkError('unknown vertex', culprit=name)
        return HatVertex(match.group('name'), int(match.group('layer')))

    # string functions {{{2
    def S(self, beta):
        if beta.dual:
            return -self.base.T(beta.base[0])
        return self.base.S(beta.base)

    def T(self, beta):
        if beta.dual:
            return -self.base.S(beta.base[-1])
        return self.base.T(beta.base)

    # relations {{{2
    def is_relation(self, first, second):
        """True if *first second* is in *ẐR* or is a full path of length 2."""
        if self.source(first) != self.target(second):
            return False
        base = self.base
        if not first.dual and not second.dual:
            return first.layer == second.layer and base.is_relation(first.base, second.base)
        if first.dual and second.dual:
            return True
        if second.dual:
            sigma = second.base
            if base.source(first.base) == self._path_source(sigma) and \
                    base.S(first.base) == -base.S(sigma[-1]):
                return True
            return len(sigma) == 1 and first.base == sigma[0]
        sigma = first.base
        if base.target(second.base) == self._path_target(sigma) and \
                base.T(second.base) == -base.T(sigma[0]):
            return True
        return len(sigma) == 1 and second.base == sigma[0]

    def is_zero_relation(self, first, second):
        """True if *first second* vanishes; full paths of length 2 do not."""
        return self.is_relation(first, second) and not self.is_full_path((first, second))

    def _reach(self, arrows, k):
        # how far the letters around the dual arrow at k follow its maximal path
        sigma, m = arrows[k].base, arrows[k].layer
        n = len(sigma)
        before = 0
        while before < n and k - 1 - before >= 0 and \
                arrows[k - 1 - before] == HatArrow(sigma[n - 1 - before], m, False):
            before += 1
        after = 0
        while after < n and k + 1 + after < len(arrows) and \
                arrows[k + 1 + after] == HatArrow(sigma[after], m + 1, False):
            after += 1
        return before, after

    def is_path(self, arrows):
        """True if the arrows compose and avoid *ẐR* and every full path."""
        arrows = tuple(arrows)
        for first, second in zip(arrows, arrows[1:]):
            if self.source(first) != self.target(second):
                return False
            if self.is_relation(first, second):
                return False
        for k, beta in enumerate(arrows):
            if beta.dual:
                before, after = self._reach(arrows, k)
                if before + after >= len(beta.base):
                    return False
        return True

    def is_full_path(self, arrows):
        arrows = tuple(arrows)
        duals = [k for k, beta in enumerate(arrows) if beta.dual]
        if len(duals) != 1:
            return False
        k = duals[0]
        before, after = self._reach(arrows, k)
        n = len(arrows[k].base)
        return before >= k and after >= len(arrows) - k - 1 and len(arrows) == n + 1

    @cached_property
    def max_relation_length(self):
        return max((len(s) for s in self.maximal), default=1) + 1

    # full paths and the path basis {{{2
    def path_of(self, arrows, vertex=None):
        arrows = tuple(arrows)
        if not arrows:
            return Path((), vertex, vertex)
        return Path(arrows, self.source(arrows[-1]), self.target(arrows[0]))

    def full_paths_from(self, y):
        """Every full path that starts at *y*, least first."""
        m = y.layer - 1
        found = []
        for sigma in self.maximal:
            for i in range(len(sigma) + 1):
                start = self._path_target(sigma) if i == 0 else self.base.source(sigma[i-1])
                if start != y.vertex:
                    continue
                arrows = tuple(HatArrow(a, m, False) for a in sigma[i:])
                arrows += (HatArrow(sigma, m, True),)
                arrows += tuple(HatArrow(a, m + 1, False) for a in sigma[:i])
                found.append(self.path_of(arrows))
        return sorted(found, key=lambda p: tuple(self.arrow_key(b) for b in p.arrows))

    def chosen_full_path(self, y):
        """The full path that represents the socle of *P_y*."""
        found = self.full_paths_from(y)
        if not found:
            raise IdentityFailure('no full path starts here', culprit=str(y))
        return found[0]

    def paths_from(self, y):
        """The basis *Ξ* of *P_y*: paths from *y* and the chosen full path."""
        result = [Path((), y, y)]
        layer = [result[0]]
        while layer:
            longer = []
            for p in layer:
                for beta in self.arrows_from(p.target):
                    arrows = (beta,) + p.arrows
                    if self.is_path(arrows):
                        longer.append(self.path_of(arrows))
            result.extend(longer)
            layer = longer
        result.append(self.chosen_full_path(y))
        return result

    def reduce(self, arrows, vertex=None):
        """The basis element equal to a product of arrows, or *None* if zero."""
        arrows = tuple(arrows)
        if not arrows or self.is_path(arrows):
            return self.path_of(arrows, vertex)
        if self.is_full_path(arrows):
            return self.chosen_full_path(self.source(arrows[-1]))
        return None

    def path_compose(self, p, r):
        """*p ∘ r* in the path basis, or *None* when it vanishes."""
        if p.source != r.target:
            raise WalkError('paths do not compose', culprit=f'{p} ∘ {r}')
        if p.is_trivial:
            return r
        if r.is_trivial:
            return p
        return self.reduce(p.arrows + r.arrows)

    # Nakayama shift {{{2
    def nu(self, item, n=1):
        """Apply *ν^n* to a vertex, arrow, path or walk."""
        if isinstance(item, HatVertex):
            return HatVertex(item.vertex, item.layer + n)
        if isinstance(item, HatArrow):
            return HatArrow(item.base, item.layer + n, item.dual)
        if isinstance(item, Path):
            return Path(
                tuple(self.nu(b, n) for b in item.arrows),
                self.nu(item.source, n), self.nu(item.target, n),
            )
        if item.letters:
            return item._new([Letter(self.nu(l.arrow, n), l.inverse) for l in item.letters])
        return item._new((), self.nu(item.vertex, n), item.sign)

    # checks and output {{{2
    def check_almost_gentle(self):
        """Run the almost gentle and string function checks inside the window."""
        arrows = self.interior_arrows()
        report = GentleReport(check_almost_gentle(self, arrows))
        report.extend(check_string_functions(self, arrows=arrows))
        return report

    def to_dot(self):
        lines = [f'digraph "{self.name}" {{']
        for y in self.vertices:
            lines.append(f'    "{y}";')
        for beta in self.arrows:
            style = ' style=dashed' if beta.dual else ''
            lines.append(f'    "{self.source(beta)}" -> "{self.target(beta)}" [label="{beta}"{style}];')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_json(self):
        return dict(
            quiver=self.base.name,
            window=list(self.window),
            vertices=[str(y) for y in self.vertices],
            arrows=[
                dict(name=str(b), source=str(self.source(b)), target=str(self.target(b)),
                     S=self.S(b), T=self.T(b))
                for b in self.arrows
            ],
            full_paths={str(y): str(self.chosen_full_path(y)) for y in self.vertices
                        if self.window[0] < y.layer},
        )


@lru_cache(maxsize=32)
def repetitive_quiver(base, window=None):
    """Cached :class:`RepQuiver` for a base quiver and window."""
    return RepQuiver(base, window)


def build_repetitive(base, window=None):
    return repetitive_quiver(base, tuple(window) if window else None)


# widening {{{1
def widening(compute, rq, *args, **kwargs):
    """Run *compute(rq, …)*, widening the window when it is exhausted.

    :raises WindowExhausted(GentleError, IndexError):
        the computation still needs more layers after *widen_limit* widenings.
    """
    for _ in range(Settings.get_pref('widen_limit')):
        try:
            return compute(rq, *args, **kwargs)
        except WindowExhausted as e:
            rq = rq.widened()
            narrate(f'{e}; widening window to {list(rq.window)}')
    return compute(rq, *args, **kwargs)


# HatString {{{1
class HatString(Walk):
    """A walk on the repetitive quiver.

    Its directed pieces *ξ₁ … ξ_L* are the maximal runs of letters of one
    direction.
    """

    @cached_property
    def runs(self):
        return direction_runs(self)

    @property
    def L(self):
        return len(self.runs)

    def piece(self, i):
        start, stop = self.runs[i-1]
        return self._new(self.letters[start:stop])

    @property
    def pieces(self):
        return [self.piece(i) for i in range(1, self.L + 1)]

    def piece_is_path(self, i):
        start, _ = self.runs[i-1]
        return not self.letters[start].inverse


def parse_hat_string(rq, text):
    """Read a hat string literal such as ``a*[-1]- a[0]``."""
    return parse_walk(rq, text, cls=HatString)


def as_hat_string(w):
    return w if isinstance(w, HatString) else w.recast(HatString)


def require_hat_string(w):
    if not is_string(w):
        raise WalkError('not a string in the repetitive quiver', culprit=str(w))
    return as_hat_string(w)


def lift(rq, w, m=0):
    """*ω[m]*: a walk of the base quiver placed in layer *m*."""
    if w.letters:
        return HatString(rq, [Letter(HatArrow(l.arrow, m, False), l.inverse) for l in w.letters])
    return HatString(rq, (), HatVertex(w.vertex, m), w.sign)


def hat_path_walk(rq, path):
    return HatString.of_arrows(rq, path.arrows)


def compose(*walks, context='strings in the repetitive quiver'):
    """Compose strings and insist the result is defined."""
    result = compose_all(string_compose, *walks)
    if result is None:
        raise IdentityFailure(
            'composition is undefined', culprit=' · '.join(str(w) for w in walks),
            details=context,
        )
    return result


# the dual basis {{{1
def xi_star(rq, xi):
    """*ξ**: the basis element that completes *ξ* to a full path.

    >>> from gentlear import bundled, RepQuiver, xi_star
    >>> rq = RepQuiver(bundled('Q1'), window=(-3, 3))
    >>> print(xi_star(rq, rq.path_of([rq.arrow('a', 0)])))
    a*[0]

    """
    if xi.is_trivial:
        return rq.chosen_full_path(rq.nu(xi.source))
    if rq.is_full_path(xi.arrows):
        return Path((), xi.source, xi.source)
    n = len(xi.arrows)
    for full in rq.full_paths_from(rq.nu(xi.target)):
        if len(full.arrows) > n and full.arrows[:n] == xi.arrows:
            return rq.path_of(full.arrows[n:])
    raise IdentityFailure('no full path extends this path', culprit=str(xi))


# × and + {{{1
def _path_of_piece(rq, piece):
    arrows = piece.arrows if piece.is_direct else piece.inverse().arrows
    return rq.path_of(arrows)


def times(zeta):
    """*ζ^×*, applied piece by piece.

    >>> from gentlear import bundled, RepQuiver, parse_hat_string, times
    >>> rq = RepQuiver(bundled('Q1'), window=(-3, 3))
    >>> print(times(parse_hat_string(rq, '1:(1[0],+)')))
    1:(1[1],-)

    """
    zeta = as_hat_string(zeta)
    rq = zeta.quiver
    if not zeta.letters:
        return zeta._new((), rq.nu(zeta.vertex), -zeta.sign)
    pieces = []
    for piece in zeta.pieces:
        star = hat_path_walk(rq, xi_star(rq, _path_of_piece(rq, piece)))
        pieces.append(star.inverse() if piece.is_direct else star)
    return compose(*pieces, context=f'{zeta}^×')


def plus(zeta):
    """*ζ^+*, the inverse of :func:`times`."""
    zeta = as_hat_string(zeta)
    rq = zeta.quiver
    if not zeta.letters:
        return zeta._new((), rq.nu(zeta.vertex, -1), -zeta.sign)
    pieces = []
    for piece in zeta.pieces:
        star = rq.nu(hat_path_walk(rq, xi_star(rq, _path_of_piece(rq, piece))), -1)
        pieces.append(star.inverse() if piece.is_direct else star)
    return compose(*pieces, context=f'{zeta}^+')


def times_power(zeta, n):
    """*ζ^{×n}* for any integer *n*."""
    for _ in range(abs(n)):
        zeta = times(zeta) if n > 0 else plus(zeta)
    return zeta


# partials and deltas {{{1
def partial(zeta):
    """*∂ζ*: strip the first directed piece.

    :raises WalkError(GentleError, ValueError): *ζ* is trivial.
    """
    zeta = as_hat_string(zeta)
    if not zeta.letters:
        raise WalkError('∂ of a trivial string', culprit=str(zeta))
    return substring_s(zeta, zeta.runs[0][1])


def partial_prime(zeta):
    zeta = as_hat_string(zeta)
    return partial(zeta) if zeta.letters and zeta.piece_is_path(1) else zeta


def partial_dblprime(zeta):
    zeta = as_hat_string(zeta)
    return partial(zeta) if zeta.letters and not zeta.piece_is_path(1) else zeta


def _sigma(rq, x, eps):
    return sigma(rq, x, eps, HatString)


def _sigma_prime(rq, x, eps):
    return sigma_prime(rq, x, eps, HatString)


def delta_t_prime(zeta):
    zeta = as_hat_string(zeta)
    if zeta.letters and not zeta.letters[0].inverse:
        return substring_s(zeta, 1)
    return compose(_sigma(zeta.quiver, zeta.t, -zeta.T), zeta, context='δ′_t')


def delta_s_prime(zeta):
    zeta = as_hat_string(zeta)
    if zeta.letters and zeta.letters[-1].inverse:
        return substring_t(zeta, len(zeta) - 1)
    return compose(zeta, _sigma(zeta.quiver, zeta.s, -zeta.S).inverse(), context='δ′_s')


def delta_t_dblprime(zeta):
    zeta = as_hat_string(zeta)
    if zeta.letters and zeta.letters[0].inverse:
        return substring_s(zeta, 1)
    return compose(_sigma_prime(zeta.quiver, zeta.t, -zeta.T).inverse(), zeta, context='δ″_t')


def delta_s_dblprime(zeta):
    zeta = as_hat_string(zeta)
    if zeta.letters and not zeta.letters[-1].inverse:
        return substring_t(zeta, len(zeta) - 1)
    return compose(zeta, _sigma_prime(zeta.quiver, zeta.s, -zeta.S), context='δ″_s')


def _both_orders(name, first_t, first_s, zeta):
    a = first_s(first_t(zeta))
    b = first_t(first_s(zeta))
    if a != b:
        raise IdentityFailure(f'the two orders of {name} disagree', culprit=str(zeta), details=f'{a} ≠ {b}')
    return a


def delta_prime(zeta):
    """*δ′ζ*; both orders of *δ′_s* and *δ′_t* are computed and compared."""
    return _both_orders('δ′', delta_t_prime, delta_s_prime, zeta)


def delta_dblprime(zeta):
    """*δ″ζ*; both orders of *δ″_s* and *δ″_t* are computed and compared."""
    return _both_orders('δ″', delta_t_dblprime, delta_s_dblprime, zeta)


def partials_and_deltas(zeta):
    """Every partial and delta operator of *ζ*, keyed by name."""
    zeta = as_hat_string(zeta)
    result = {}
    if zeta.letters:
        result['∂'] = partial(zeta)
    result.update({
        "∂′": partial_prime(zeta),
        "∂″": partial_dblprime(zeta),
        "δ′_t": delta_t_prime(zeta),
        "δ′_s": delta_s_prime(zeta),
        "δ″_t": delta_t_dblprime(zeta),
        "δ″_s": delta_s_dblprime(zeta),
        "δ′": delta_prime(zeta),
        "δ″": delta_dblprime(zeta),
    })
    return result


# Δ {{{1
def Delta(zeta):
    """*Δζ = δ′(ζ^×)*; the inverse of the syzygy on string representations."""
    return delta_prime(times(zeta))


def Delta_inverse(zeta):
    """*Δ⁻¹ζ = δ″(ζ^+)*; *Ω V_ζ ≅ V_{Δ⁻¹ζ}*."""
    return delta_dblprime(plus(zeta))


def Delta_power(zeta, n):
    """*Δ^n ζ* for any integer *n*."""
    for _ in range(abs(n)):
        zeta = Delta(zeta) if n > 0 else Delta_inverse(zeta)
    return zeta


# orders on strings {{{1
def _common_prefix(a, b):
    n = 0
    while n < min(len(a), len(b)) and a.letters[n] == b.letters[n]:
        n += 1
    return n


def leq_t(first, second):
    """*ζ′ ≤_t ζ″*; requires matching *t* and *T*."""
    if first.t != second.t or first.T != second.T:
        return False
    if first == second:
        return True
    n = _common_prefix(first, second)
    if len(second) > n and not second.letters[n].inverse:
        return True
    return len(first) > n and first.letters[n].inverse


def leq_s(first, second):
    """*ζ′ ≤_s ζ″*: *ζ′⁻¹ ≤_t ζ″⁻¹*."""
    if first.s != second.s or first.S != second.S:
        return False
    return leq_t(first.inverse(), second.inverse())


def common_prefix_length(first, second):
    return _common_prefix(first, second)


# the neighbours of a string {{{1
def hat_plus_left(zeta):
    """*₊ζ*: add a hook at the *t* end or remove a cohook; *None* for ∅."""
    zeta = as_hat_string(zeta)
    rq = zeta.quiver
    arrow = alpha_prime(rq, zeta.t, -zeta.T)
    if arrow is not None:
        hooked = string_compose(HatString(rq, [Letter(arrow, True)]), zeta)
        if hooked is not None:
            return compose(_sigma(rq, rq.source(arrow), -rq.S(arrow)), hooked, context='₊ζ')
    trimmed = partial_dblprime(zeta)
    if trimmed.letters:
        return substring_s(trimmed, 1)
    return None


def hat_plus_right(zeta):
    """*ζ₊ = (₊(ζ⁻¹))⁻¹*."""
    zeta = as_hat_string(zeta)
    result = hat_plus_left(zeta.inverse())
    return None if result is None else result.inverse()


def hat_plus_both(zeta):
    """*₊ζ₊*, computed through both sides when both exist.

    :raises IdentityFailure(GentleError, AssertionError):
        the two ways disagree or both sides are empty.
    """
    left = hat_plus_left(zeta)
    right = hat_plus_right(zeta)
    via_left = None if left is None else hat_plus_right(left)
    via_right = None if right is None else hat_plus_left(right)
    if via_left is not None and via_right is not None and via_left != via_right:
        raise IdentityFailure('₊ζ₊ depends on the side', culprit=str(zeta), details=f'{via_left} ≠ {via_right}')
    result = via_left if via_left is not None else via_right
    if result is None:
        raise IdentityFailure('₊ζ₊ is empty', culprit=str(zeta))
    return result


def hat_plus(zeta):
    """The triple *(₊ζ, ζ₊, ₊ζ₊)*."""
    return hat_plus_left(zeta), hat_plus_right(zeta), hat_plus_both(zeta)


# bands and enumeration {{{1
def is_hat_band(w):
    return is_band(w)


def require_hat_band(w):
    if not is_band(w):
        raise NotABand(str(w))
    return as_hat_string(w)


def _letters_at(rq, vertex):
    letters = [Letter(b, False) for b in rq.arrows_to(vertex)]
    letters += [Letter(b, True) for b in rq.arrows_from(vertex)]
    return sorted(letters, key=lambda l: (rq.arrow_key(l.arrow), l.inverse))


def enumerate_hat_strings(rq, max_len, layer=0):
    """Strings with *t* in the given layer and at most *max_len* letters.

    Every string of the repetitive quiver is a *ν* shift of one of these or
    of its inverse.
    """
    starts = [HatVertex(x, layer) for x in rq.base.vertices]
    for y in starts:
        for eps in (1, -1):
            yield HatString(rq, (), y, eps)
    frontier = [HatString(rq, [l]) for y in starts for l in _letters_at(rq, y)]
    frontier = [w for w in frontier if is_string(w)]
    length = 1
    while frontier and length <= max_len:
        yield from sorted(frontier, key=lambda w: w.sort_key())
        longer = []
        for w in frontier:
            for l in _letters_at(rq, w.s):
                candidate = w._new(w.letters + (l,))
                if is_string(candidate):
                    longer.append(candidate)
        frontier = longer
        length += 1
