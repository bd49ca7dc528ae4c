# encoding: utf8

# Description {{{1
"""
Almost split triangles of string and band complexes.

:func:`plus_left`, :func:`plus_right` and :func:`plus_both` give the
neighbours *₊ω*, *ω₊* and *₊ω₊* of a homotopy string together with the shifts
*m′* and *m″*, and :func:`ar_triangle_string` assembles the triangle

    *X_{m,ω} → X_{m+m′,₊ω} ⊕ X_{m,ω₊} → X_{m+m″,₊ω₊} → X_{m−1,ω}*::

    >>> from gentlear import bundled, parse_homotopy_string, ar_triangle_string
    >>> q1 = bundled('Q1')
    >>> triangle = ar_triangle_string(0, parse_homotopy_string(q1, '1:(2,-)'))
    >>> len(triangle.middle), str(triangle.shifted)
    (1, '(-1, 1:(2,-))')

:func:`ar_component` iterates the triangles into a patch of the
Auslander–Reiten quiver, kept as a :class:`networkx.MultiDiGraph`.
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
from collections import Counter, deque, namedtuple
import json
from inform import narrate
import networkx as nx
from .core import IdentityFailure, Settings, WalkError
from .complexes import Automorphism, as_automorphism, band_complex, jordan, string_complex
from .homotopy import (
    HomotopyString, as_homotopy_string, enumerate_homotopy_strings,
    hcompose, is_homotopy_band, sigma_omega, theta_max,
)
from .happel import psi
from .modules import certify_ar_sequence, hat_ar_sequence
from .repetitive import Delta_power, hat_plus_left, hat_plus_right, repetitive_quiver
from .strings import alpha, sigma


# objects {{{1
class StringObject(namedtuple('StringObject', 'm walk')):
    """The string complex *X_{m,ω}*."""
    __slots__ = ()

    def complex(self):
        return string_complex(self.m, self.walk)

    def canonical(self):
        """The same object written with the smaller of *ω* and *ω⁻¹*."""
        other = StringObject(self.m + self.walk.deg, as_homotopy_string(self.walk.inverse()))
        return min(self, other, key=lambda o: (o.walk.sort_key(), o.m))

    def __str__(self):
        return f'({self.m}, {self.walk})'


class BandObject(namedtuple('BandObject', 'm walk n lam')):
    """The band complex *Y_{m,ω,J_n(λ)}*."""
    __slots__ = ()

    def complex(self):
        return band_complex(self.m, self.walk, jordan(self.n, self.lam))

    def canonical(self):
        return self

    def __str__(self):
        return f'({self.m}, {self.walk}, J{self.n}({self.lam}))'


# r and ω′ {{{1
def r_of(omega):
    """*r(ω)*: the length of the leading antipath of arrows."""
    omega = as_homotopy_string(omega)
    q = omega.quiver
    letters = omega.letters
    r = 0
    while r < len(letters) and not letters[r].inverse and \
            (r == 0 or q.is_relation(letters[r-1].arrow, letters[r].arrow)):
        r += 1
    return r


def omega_prime(omega):
    """*ω′*: *ω* with its leading antipath removed (the last arrow kept as a sign)."""
    omega = as_homotopy_string(omega)
    r = r_of(omega)
    if r == 0:
        return omega
    rest = omega.letters[r:]
    if rest:
        return omega._new(rest)
    last = omega.letters[r-1]
    return omega._new((), omega.letter_source(last), omega.letter_S(last))


# ₊ω, ω₊ and ₊ω₊ {{{1
Neighbour = namedtuple('Neighbour', 'walk shift case')


def _theta(q, x, eps):
    theta = theta_max(q, x, eps)
    if theta is None:
        raise IdentityFailure('no longest antipath', culprit=f'({x}, {eps:+d})')
    return theta


def _defined(walk, culprit, context):
    if walk is None:
        raise IdentityFailure('composition is undefined', culprit=culprit, details=context)
    return as_homotopy_string(walk)


def plus_left(omega):
    """*₊ω* and *m′(ω)*; the walk is *None* when *₊ω = ∅*.

    >>> from gentlear import bundled, parse_homotopy_string, plus_left
    >>> left = plus_left(parse_homotopy_string(bundled('Q1'), '1:(2,+)'))
    >>> print(left.walk, left.shift)
    1:(1,-) 0

    """
    omega = as_homotopy_string(omega)
    q = omega.quiver
    culprit = str(omega)
    sigma_ = sigma_omega(omega)
    r = r_of(omega)
    if sigma_.letters:
        theta = _theta(q, sigma_.t, -sigma_.T)
        walks = (sigma_, omega) if theta.is_trivial else (theta.inverse(), sigma_, omega)
        walk = _defined(hcompose(*walks), culprit, 'θ⁻¹σω')
        return Neighbour(walk, len(theta) - 1, 'extend by σ')
    prime = omega_prime(omega)
    theta = _theta(q, prime.t, -prime.T)
    shift = len(theta) + r - 1
    if theta.letters and prime.letters:
        walk = _defined(hcompose(theta.inverse(), prime), culprit, "θ⁻¹ω′")
        return Neighbour(walk, shift, "extend ω′ by θ")
    if theta.letters:
        return Neighbour(as_homotopy_string(theta.suffix(1).inverse()), shift, 'antipath')
    if prime.letters:
        if prime.letters[0].inverse:
            return Neighbour(prime.suffix(1), shift, "trim ω′")
        return Neighbour(prime, shift, "ω′")
    return Neighbour(None, shift, 'empty')


def plus_right(omega):
    """*ω₊ = (₊(ω⁻¹))⁻¹* with *m′(ω⁻¹)*."""
    omega = as_homotopy_string(omega)
    left = plus_left(omega.inverse())
    walk = None if left.walk is None else as_homotopy_string(left.walk.inverse())
    return Neighbour(walk, left.shift, left.case)


def plus_both(omega):
    """*₊ω₊* and *m″(ω)*.

    When both neighbours exist the two ways round are compared as objects.

    :raises IdentityFailure(GentleError, AssertionError):
        the two ways disagree or both neighbours are empty.
    """
    omega = as_homotopy_string(omega)
    left = plus_left(omega)
    right = plus_right(omega)
    via_left = via_right = None
    if left.walk is not None:
        end = plus_right(left.walk)
        via_left = Neighbour(end.walk, left.shift, 'via ₊ω')
    if right.walk is not None:
        end = plus_left(right.walk)
        via_right = Neighbour(end.walk, end.shift, 'via ω₊')
    if via_left and via_right and via_left.walk is not None and via_right.walk is not None:
        a = StringObject(via_left.shift, via_left.walk).canonical()
        b = StringObject(via_right.shift, via_right.walk).canonical()
        if a != b:
            raise IdentityFailure('₊ω₊ depends on the side', culprit=str(omega), details=f'{a} ≠ {b}')
    result = next((v for v in (via_left, via_right) if v and v.walk is not None), None)
    if result is None:
        raise IdentityFailure('₊ω₊ is empty', culprit=str(omega))
    return result


# triangles {{{1
class ARTriangle(namedtuple('ARTriangle', 'start middle end shifted m_prime m_dblprime hat')):
    """An almost split triangle given by its objects.

    *middle* lists the summands of the middle term; *hat* holds the certified
    almost split sequence of representations when it was computed.
    """
    __slots__ = ()

    def __str__(self):
        middle = ' ⊕ '.join(str(o) for o in self.middle) or '0'
        return f'{self.start} → {middle} → {self.end} → {self.shifted}'

    def to_json(self):
        return dict(
            direction='tau-inverse',
            start=str(self.start),
            middle=[str(o) for o in self.middle],
            end=str(self.end),
            shifted=str(self.shifted),
            m_prime=self.m_prime,
            m_dblprime=self.m_dblprime,
            certified=self.hat is not None,
        )


def _same_module(first, second):
    if first is None or second is None:
        return first is None and second is None
    return first == second or first == second.inverse()


def certify_string_triangle(start, left, right, end, rq=None):
    """Check a triangle against the almost split sequence of its image.

    *left* and *right* are the summands coming from *₊ω* and *ω₊* (*None*
    when absent). Returns the certified sequence of representations.

    :raises IdentityFailure(GentleError, AssertionError):
        the images of the objects differ from the neighbours of *Δ^{−m}ψω*
        or the sequence is not almost split.
    """
    rq = rq or repetitive_quiver(start.walk.quiver)

    def image(obj):
        if obj is None:
            return None
        return Delta_power(psi(obj.walk, rq).string, -obj.m)

    sequence = hat_ar_sequence(image(start))
    expected = dict(
        left=sequence.strings[1], right=sequence.strings[2], end=sequence.strings[3],
    )
    found = dict(left=image(left), right=image(right), end=image(end))
    culprit = f'{start} → {end}'
    for key in expected:
        if not _same_module(expected[key], found[key]):
            raise IdentityFailure(
                'triangle differs from the almost split sequence of its image',
                culprit=culprit, details=f'{key}: {found[key]} ≠ {expected[key]}',
            )
    certify_ar_sequence(sequence)
    return sequence


def ar_triangle_string(m, omega, checked=None):
    """The almost split triangle that starts at *X_{m,ω}*.

    With *checked* (default: the *checked* preference) the almost split
    sequence of representations is built and certified as well.
    """
    omega = as_homotopy_string(omega)
    left = plus_left(omega)
    right = plus_right(omega)
    both = plus_both(omega)
    start = StringObject(m, omega)
    on_left = None if left.walk is None else StringObject(m + left.shift, left.walk)
    on_right = None if right.walk is None else StringObject(m, right.walk)
    end = StringObject(m + both.shift, both.walk)
    checked = Settings.get_pref('checked') if checked is None else checked
    hat = certify_string_triangle(start, on_left, on_right, end) if checked else None
    return ARTriangle(
        start, tuple(o for o in (on_left, on_right) if o is not None), end,
        StringObject(m - 1, omega), left.shift, both.shift, hat,
    )


def ar_triangle_band(m, omega, mu, checked=None):
    """The almost split triangle that starts at *Y_{m,ω,J_n(λ)}*.

    :raises NotIndecomposable(GentleError, ValueError):
        *μ* is not a single Jordan block.
    """
    omega = as_homotopy_string(omega)
    if not is_homotopy_band(omega):
        raise WalkError('not a homotopy band', culprit=str(omega))
    n, lam = as_automorphism(mu).jordan_form()
    middle = [BandObject(m, omega, k, lam) for k in (n - 1, n + 1) if k]
    start = BandObject(m, omega, n, lam)
    checked = Settings.get_pref('checked') if checked is None else checked
    hat = certify_jordan_sequence(n, lam) if checked else None
    return ARTriangle(start, tuple(middle), start, BandObject(m - 1, omega, n, lam), 0, 0, hat)


# automorphisms {{{1
def automorphism_homs(source, target):
    """A basis of the maps *F* with *F μ′ = μ″ F*."""
    source, target = as_automorphism(source), as_automorphism(target)
    field = source.field
    a, b = source.dim, target.dim
    # F is flattened row by row; row i*a + j of the system is (F μ′ − μ″ F)[i, j]
    system = [[0] * (b * a) for _ in range(b * a)]
    for i in range(b):
        for j in range(a):
            row = system[i * a + j]
            for k in range(a):
                row[i * a + k] += source.matrix[k, j]
            for k in range(b):
                row[k * a + j] -= target.matrix[i, k]
    null = field.nullspace(field.array(system))
    return [field.array(null[:, c].reshape(b, a)) for c in range(null.shape[1])]


JordanSequence = namedtuple('JordanSequence', 'start middle end left right')


def _block(field, rows, cols, offset):
    m = field.zeros(rows, cols)
    for j in range(cols):
        i = j + offset
        if 0 <= i < rows:
            m[i, j] = 1
    return m


def jordan_sequence(n, lam, field=None):
    """*J_n(λ) → J_{n−1}(λ) ⊕ J_{n+1}(λ) → J_n(λ)* with its maps."""
    field = field or Settings.field()
    start = jordan(n, lam, field)
    parts = [jordan(k, lam, field) for k in (n - 1, n + 1) if k]
    size = sum(p.dim for p in parts)
    middle = field.zeros(size, size)
    left = field.zeros(size, n)
    right = field.zeros(n, size)
    offset = 0
    for p in parts:
        k = p.dim
        middle[offset:offset + k, offset:offset + k] = p.matrix
        if k < n:
            left[offset:offset + k, :] = _block(field, k, n, -1)
            right[:, offset:offset + k] = _block(field, n, k, 0)
        else:
            left[offset:offset + k, :] = _block(field, k, n, 0)
            right[:, offset:offset + k] = field.neg(_block(field, n, k, -1))
        offset += k
    return JordanSequence(start, Automorphism(middle, field), start, field.array(left), field.array(right))


def _factors(field, targets, vectors):
    return all(field.in_span(vectors, t) is not None for t in targets)


def certify_jordan_sequence(n, lam, field=None):
    """Certify the almost split sequence of automorphisms ending at *J_n(λ)*.

    Checks that the maps commute with the automorphisms, exactness,
    that the sequence does not split and that every radical endomorphism of
    the end factors through the right map (dually for the start).

    :raises IdentityFailure(GentleError, AssertionError): a check fails.
    """
    seq = jordan_sequence(n, lam, field)
    field = seq.start.field
    culprit = f'J{n}({lam})'
    a, e = seq.start.matrix, seq.middle.matrix
    if not field.equal(field.matmul(seq.left, a), field.matmul(e, seq.left)) or \
            not field.equal(field.matmul(seq.right, e), field.matmul(a, seq.right)):
        raise IdentityFailure('maps do not commute with the automorphisms', culprit=culprit)
    if not field.is_zero(field.matmul(seq.right, seq.left)) or \
            field.rank(seq.left) != n or field.rank(seq.right) != n or \
            seq.middle.dim != 2 * n:
        raise IdentityFailure('sequence is not exact', culprit=culprit)
    retractions = [field.matmul(r, seq.left) for r in automorphism_homs(seq.middle, seq.start)]
    if field.in_span(retractions, field.identity(n)) is not None:
        raise IdentityFailure('sequence splits', culprit=culprit)
    nilpotent = field.sub(a, field.scale(lam, field.identity(n)))
    radical = [field.power(nilpotent, k) for k in range(1, n)]
    through_right = [field.matmul(seq.right, u) for u in automorphism_homs(seq.start, seq.middle)]
    through_left = [field.matmul(v, seq.left) for v in automorphism_homs(seq.middle, seq.start)]
    if not _factors(field, radical, through_right) or not _factors(field, radical, through_left):
        raise IdentityFailure('radical map does not factor', culprit=culprit)
    return seq


# boundary {{{1
BoundaryClass = namedtuple('BoundaryClass', 'boundary vertex sign power successor')


def classify_boundary(omega):
    """Decide whether *ω = θ_{x,ε}^{ε′}* with *α_{x,ε} = ∅*.

    Returns a :class:`BoundaryClass`; for a boundary string *successor* is
    the predicted *₊ω₊*.

    :raises WalkError(GentleError, ValueError): *ω* is a homotopy band.
    """
    omega = as_homotopy_string(omega)
    q = omega.quiver
    if omega.letters and is_homotopy_band(omega):
        raise WalkError('bands have their own triangles', culprit=str(omega))
    for x in q.vertices:
        for eps in (1, -1):
            if alpha(q, x, eps) is not None:
                continue
            theta = theta_max(q, x, eps)
            if theta is None:
                continue
            for power in (1, -1):
                candidate = theta if power > 0 else as_homotopy_string(theta.inverse())
                if candidate != omega:
                    continue
                oriented = omega if power > 0 else as_homotopy_string(omega.inverse())
                # a trivial 1_{x,ε} extends by σ_{x,ε}
                if oriented.is_trivial:
                    s = sigma_omega(oriented)
                else:
                    s = sigma(q, oriented.s, -oriented.S, HomotopyString)
                successor = _theta(q, s.t, -s.T)
                if power < 0:
                    successor = as_homotopy_string(successor.inverse())
                return BoundaryClass(True, x, eps, power, successor)
    return BoundaryClass(False, None, None, None, None)


# components {{{1
def _neighbours(node):
    if isinstance(node, BandObject):
        triangle = ar_triangle_band(node.m, node.walk, jordan(node.n, node.lam), checked=False)
    else:
        triangle = ar_triangle_string(node.m, node.walk, checked=False)
    return triangle


def ar_component(seed, steps):
    """A patch of the Auslander–Reiten quiver around *seed*.

    Nodes are canonical :class:`StringObject` or :class:`BandObject`
    descriptors labelled ``(m, word)``; edges carry ``kind`` ``irreducible``
    (start to middle, middle to end) or ``tau`` (end to start).
    """
    graph = nx.MultiDiGraph()
    seed = seed.canonical()
    graph.add_node(seed, label=str(seed))
    frontier = deque([(seed, 0)])
    expanded = set()
    while frontier:
        node, depth = frontier.popleft()
        if node in expanded or depth >= steps:
            continue
        expanded.add(node)
        triangle = _neighbours(node)
        end = triangle.end.canonical()
        found = [o.canonical() for o in triangle.middle] + [end]
        for other in found:
            if other not in graph:
                graph.add_node(other, label=str(other))
                frontier.append((other, depth + 1))
        for middle in found[:-1]:
            if not graph.has_edge(node, middle):
                graph.add_edge(node, middle, kind='irreducible')
            if not graph.has_edge(middle, end):
                graph.add_edge(middle, end, kind='irreducible')
        graph.add_edge(end, node, kind='tau')
    narrate(f'component: {graph.number_of_nodes()} objects, {graph.number_of_edges()} maps')
    return graph


def emit_component(graph, format='dot'):
    """Render a component as ``dot`` or ``json`` text with a stable ordering."""
    nodes = sorted(graph.nodes(data='label'), key=lambda n: n[1])
    edges = sorted(
        (graph.nodes[u]['label'], graph.nodes[v]['label'], kind)
        for u, v, kind in graph.edges(data='kind')
    )
    if format == 'json':
        return json.dumps(dict(
            direction='tau-inverse',
            nodes=[label for _, label in nodes],
            edges=[dict(source=u, target=v, kind=k) for u, v, k in edges],
        ), indent=2, ensure_ascii=False) + '\n'
    lines = ['digraph component {']
    for _, label in nodes:
        lines.append(f'    "{label}";')
    for u, v, kind in edges:
        style = ' [style=dashed]' if kind == 'tau' else ''
        lines.append(f'    "{u}" -> "{v}"{style};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


# verification {{{1
def verify_section6(quiver, max_len=None, checked=None, jordan_sizes=(1, 2, 3), eigenvalues=(1, 2)):
    """Check the neighbour lemma, its dual, the boundary corollary and the triangles.

    Returns a :class:`collections.Counter` of passed checks.

    :raises IdentityFailure(GentleError, AssertionError): a check fails.
    """
    max_len = Settings.get_pref('max_len') if max_len is None else max_len
    checked = Settings.get_pref('checked') if checked is None else checked
    rq = repetitive_quiver(quiver)
    report = Counter()
    for omega in enumerate_homotopy_strings(quiver, max_len):
        zeta = psi(omega, rq).string
        culprit = str(omega)

        left = plus_left(omega)
        hat_left = hat_plus_left(zeta)
        if (left.walk is None) != (hat_left is None):
            raise IdentityFailure('₊ω = ∅ and ₊(ψω) = ∅ disagree', culprit=culprit)
        if left.walk is not None and hat_left != Delta_power(psi(left.walk, rq).string, -left.shift):
            raise IdentityFailure('₊(ψω) ≠ Δ^{-m′} ψ(₊ω)', culprit=culprit, details=left.case)
        report['₊(ψω)'] += 1

        right = plus_right(omega)
        hat_right = hat_plus_right(zeta)
        if (right.walk is None) != (hat_right is None):
            raise IdentityFailure('ω₊ = ∅ and (ψω)₊ = ∅ disagree', culprit=culprit)
        if right.walk is not None and hat_right != psi(right.walk, rq).string:
            raise IdentityFailure('(ψω)₊ ≠ ψ(ω₊)', culprit=culprit, details=right.case)
        report['(ψω)₊'] += 1

        if not (omega.letters and is_homotopy_band(omega)):
            boundary = classify_boundary(omega)
            empty = left.walk is None or right.walk is None
            if boundary.boundary != empty:
                raise IdentityFailure('boundary classification disagrees', culprit=culprit)
            if boundary.boundary:
                both = plus_both(omega).walk
                if not _same_module(both, boundary.successor):
                    raise IdentityFailure(
                        '₊ω₊ differs from the predicted successor', culprit=culprit,
                        details=f'{both} ≠ {boundary.successor}',
                    )
            report['boundary'] += 1

        triangle = ar_triangle_string(0, omega, checked=checked)
        if len(triangle.middle) > 2 or triangle.shifted != StringObject(-1, omega):
            raise IdentityFailure('malformed triangle', culprit=culprit)
        report['string triangles'] += 1
        if checked:
            report['certified sequences'] += 1
    for n in jordan_sizes:
        for lam in eigenvalues:
            certify_jordan_sequence(n, lam)
            report['Jordan sequences'] += 1
    narrate(f'{quiver.name}: almost split triangles verified', dict(report))
    return report
