# encoding: utf8

# Description {{{1
"""
Representations of the repetitive quiver and the exact linear algebra used to
certify the string calculus.

A :class:`HatRep` has one basis vector per entry of *basis* (the entry is the
vertex that carries it) and a square matrix per arrow.  Homomorphisms are
:class:`RepMap` objects, matrices that respect the vertices and commute with
the arrows.  From these come kernels, cokernels, push-outs, projective covers,
syzygies, injective envelopes, Hom spaces and isomorphism tests::

    >>> from gentlear import bundled, RepQuiver, parse_hat_string
    >>> from gentlear import string_module, syzygy, is_isomorphic, Delta_inverse
    >>> rq = RepQuiver(bundled('Q1'), window=(-4, 4))
    >>> zeta = parse_hat_string(rq, '1:(1[0],+)')
    >>> omega = syzygy(string_module(zeta)).module
    >>> omega.dim, is_isomorphic(omega, string_module(Delta_inverse(zeta)))
    (2, True)

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
from collections import Counter, namedtuple
from inform import narrate
import numpy as np
from .core import IdentityFailure, NotABand, Settings, WalkError
from .complexes import as_automorphism
from .linalg import find_invertible
from .repetitive import (
    HatArrow, HatVertex, as_hat_string, common_prefix_length, hat_plus_both,
    hat_plus_left, hat_plus_right, leq_s, leq_t, xi_star,
)
from .strings import is_band


# Utilities {{{1
def _columns(field, n, vectors):
    """Turn a matrix or a list of vectors into an *n × k* array."""
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return field.array(vectors) if vectors.size else field.zeros(n, vectors.shape[1])
    vectors = [np.asarray(v).reshape(-1) for v in vectors]
    if not vectors:
        return field.zeros(n, 0)
    return field.array(np.column_stack(vectors))


def _hstack(field, n, blocks):
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        return field.zeros(n, 0)
    return field.array(np.hstack(blocks))


def _arrows_among(rq, vertices):
    vertices = set(vertices)
    found = set()
    for y in vertices:
        for beta in rq.arrows_from(y):
            if rq.target(beta) in vertices:
                found.add(beta)
    return sorted(found, key=rq.arrow_key)


# HatRep {{{1
class HatRep:
    """A finite dimensional representation of the repetitive quiver.

    :arg rq: the :class:`~gentlear.RepQuiver`.
    :arg basis: the vertex of every basis vector.
    :arg action: dictionary that maps hat arrows to square matrices.
    :arg str name: optional description such as ``V(a[0])``.
    """

    def __init__(self, rq, basis, action=None, field=None, name=None):
        self.rq = rq
        self.field = field or Settings.field()
        self.basis = tuple(basis)
        self.name = name
        self.action = {}
        for beta, m in (action or {}).items():
            m = self.field.array(m)
            if not self.field.is_zero(m):
                self.action[beta] = m
        self._indices = {}
        for i, y in enumerate(self.basis):
            self._indices.setdefault(y, []).append(i)
        self.summands = None

    # shape {{{2
    @property
    def dim(self):
        return len(self.basis)

    @property
    def vertices(self):
        return sorted(self._indices, key=self.rq.vertex_key)

    def indices(self, y):
        return self._indices.get(y, [])

    def dimension_vector(self):
        return {y: len(self._indices[y]) for y in self.vertices}

    def arrows(self):
        return _arrows_among(self.rq, self.vertices)

    # action {{{2
    def act(self, beta):
        if beta in self.action:
            return self.action[beta]
        return self.field.zeros(self.dim, self.dim)

    def projector(self, y):
        p = self.field.zeros(self.dim, self.dim)
        for i in self.indices(y):
            p[i, i] = 1
        return self.field.array(p)

    def act_path(self, path):
        """The matrix of a path of the repetitive quiver."""
        if path.is_trivial:
            return self.projector(path.source)
        return self.field.chain(*(self.act(beta) for beta in path.arrows))

    # relations {{{2
    def violations(self):
        """The relations of the repetitive algebra that fail on this representation."""
        rq, field = self.rq, self.field
        failures = []
        arrows = self.arrows()
        for first in arrows:
            for second in arrows:
                if rq.is_zero_relation(first, second) and \
                        not field.is_zero(field.matmul(self.act(first), self.act(second))):
                    failures.append(f'{first} {second}')
        lo, hi = rq.window
        for y in self.vertices:
            if y.layer - 1 < lo:
                continue
            chosen = self.act_path(rq.chosen_full_path(y))
            for full in rq.full_paths_from(y):
                if not field.equal(self.act_path(full), chosen):
                    failures.append(f'{full} ≠ {rq.chosen_full_path(y)}')
            for beta in arrows:
                if rq.source(beta) == rq.chosen_full_path(y).target and \
                        not field.is_zero(field.matmul(self.act(beta), chosen)):
                    failures.append(f'{beta} · full path at {y}')
                if rq.target(beta) == y and \
                        not field.is_zero(field.matmul(chosen, self.act(beta))):
                    failures.append(f'full path at {y} · {beta}')
        return failures

    def is_representation(self):
        return not self.violations()

    def check(self):
        """Return self if every relation vanishes.

        :raises IdentityFailure(GentleError, AssertionError): a relation does not vanish.
        """
        failures = self.violations()
        if failures:
            raise IdentityFailure('relation does not vanish', culprit=str(self), details='; '.join(failures))
        return self

    # output {{{2
    def __str__(self):
        if self.name:
            return self.name
        return ' '.join(f'{y}:{n}' for y, n in self.dimension_vector().items()) or '0'

    def __repr__(self):
        return f'HatRep({self})'

    def to_json(self):
        return dict(
            name=self.name,
            dimension_vector={str(y): n for y, n in self.dimension_vector().items()},
            arrows={
                str(b): [[int(v) if v == int(v) else str(v) for v in row] for row in m.tolist()]
                for b, m in sorted(self.action.items(), key=lambda i: self.rq.arrow_key(i[0]))
            },
        )


def zero_rep(rq, field=None):
    return HatRep(rq, (), field=field, name='0')


# RepMap {{{1
class RepMap:
    """A homomorphism of representations, given by its matrix."""

    def __init__(self, source, target, matrix=None, name=None):
        self.source = source
        self.target = target
        self.field = source.field
        if matrix is None:
            matrix = self.field.zeros(target.dim, source.dim)
        self.matrix = _columns(self.field, target.dim, matrix) if target.dim else \
            self.field.zeros(0, source.dim)
        self.name = name

    # algebra {{{2
    def compose(self, other):
        """*self ∘ other*."""
        return RepMap(other.source, self.target, self.field.matmul(self.matrix, other.matrix))

    def __matmul__(self, other):
        return self.compose(other)

    def add(self, other):
        return RepMap(self.source, self.target, self.field.add(self.matrix, other.matrix))

    def scale(self, c):
        return RepMap(self.source, self.target, self.field.scale(c, self.matrix))

    def neg(self):
        return self.scale(-1)

    def is_zero(self):
        return self.field.is_zero(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, RepMap):
            return NotImplemented
        return self.field.equal(self.matrix, other.matrix)

    __hash__ = None

    # properties {{{2
    def violations(self):
        failures = []
        field = self.field
        for i, y in enumerate(self.target.basis):
            for j, x in enumerate(self.source.basis):
                if x != y and self.matrix[i, j]:
                    failures.append(f'mixes {x} and {y}')
        vertices = set(self.source.vertices) | set(self.target.vertices)
        for beta in _arrows_among(self.source.rq, vertices):
            left = field.matmul(self.target.act(beta), self.matrix)
            right = field.matmul(self.matrix, self.source.act(beta))
            if not field.equal(left, right):
                failures.append(f'does not commute with {beta}')
        return failures

    def is_homomorphism(self):
        return not self.violations()

    def check(self):
        """Return self if it is a homomorphism.

        :raises IdentityFailure(GentleError, AssertionError): it is not.
        """
        failures = self.violations()
        if failures:
            raise IdentityFailure('not a homomorphism', culprit=str(self), details='; '.join(failures))
        return self

    @property
    def rank(self):
        return self.field.rank(self.matrix)

    def is_injective(self):
        return self.rank == self.source.dim

    def is_surjective(self):
        return self.rank == self.target.dim

    def is_isomorphism(self):
        return self.source.dim == self.target.dim and self.field.is_invertible(self.matrix)

    def kernel(self):
        return kernel(self)

    def cokernel(self):
        return cokernel(self)

    def image(self):
        return image(self)

    def __str__(self):
        return self.name or f'{self.source} → {self.target}'


# subspaces {{{1
def _homogeneous(rep, vectors):
    """A basis of the span of the vertex components of the given vectors."""
    field = rep.field
    columns = _columns(field, rep.dim, vectors)
    parts = []
    for y in rep.vertices:
        idx = rep.indices(y)
        block = field.zeros(rep.dim, columns.shape[1])
        block[idx, :] = columns[idx, :]
        parts.append(field.column_space(block))
    return _hstack(field, rep.dim, parts)


def _closure(rep, vectors):
    field = rep.field
    basis = _homogeneous(rep, vectors)
    while True:
        images = [basis] + [field.matmul(rep.act(beta), basis) for beta in rep.arrows()]
        grown = _homogeneous(rep, _hstack(field, rep.dim, images))
        if grown.shape[1] == basis.shape[1]:
            return basis
        basis = grown


def _vertex_of(rep, column):
    for i, value in enumerate(column):
        if value:
            return rep.basis[i]
    raise IdentityFailure('zero basis vector')


def _restrict(rep, basis, name=None):
    field = rep.field
    vertices = [_vertex_of(rep, basis[:, k]) for k in range(basis.shape[1])]
    action = {}
    for beta in rep.arrows():
        coefficients = field.solve(basis, field.matmul(rep.act(beta), basis))
        if coefficients is None:
            raise IdentityFailure('subspace is not a submodule', culprit=str(rep))
        action[beta] = coefficients
    return HatRep(rep.rq, vertices, action, field, name)


def submodule(rep, vectors, name=None):
    """The submodule generated by the vectors, and its inclusion."""
    basis = _closure(rep, vectors)
    sub = _restrict(rep, basis, name)
    return sub, RepMap(sub, rep, basis)


def generated_submodule(rep, vector):
    return submodule(rep, [vector])


def quotient(rep, vectors, name=None):
    """The quotient by the submodule generated by the vectors, and the projection."""
    field = rep.field
    basis = _closure(rep, vectors)
    complement = []
    for y in rep.vertices:
        current = basis[rep.indices(y), :]
        current = current[:, [k for k in range(current.shape[1]) if not field.is_zero(current[:, k])]]
        for i in rep.indices(y):
            unit = field.zeros(rep.dim, 1)
            unit[i, 0] = 1
            trial = field.array(np.hstack([current, unit[rep.indices(y), :]]))
            if field.rank(trial) > field.rank(current):
                current = trial
                complement.append(unit[:, 0])
    complement = _columns(field, rep.dim, complement)
    change = _hstack(field, rep.dim, [basis, complement])
    projection = field.inverse(change)[basis.shape[1]:, :] if rep.dim else field.zeros(0, 0)
    vertices = [_vertex_of(rep, complement[:, k]) for k in range(complement.shape[1])]
    action = {
        beta: field.chain(projection, rep.act(beta), complement)
        for beta in rep.arrows()
    }
    q = HatRep(rep.rq, vertices, action, field, name)
    return q, RepMap(rep, q, projection)


def kernel(f):
    """The kernel of *f* and its inclusion."""
    null = f.field.nullspace(f.matrix) if f.source.dim else f.field.zeros(0, 0)
    return submodule(f.source, null)


def image(f):
    return submodule(f.target, f.matrix)


def cokernel(f):
    """The cokernel of *f* and the projection onto it."""
    return quotient(f.target, f.matrix)


def direct_sum(*reps, name=None):
    """The direct sum, with its injections and projections."""
    rq = reps[0].rq
    field = reps[0].field
    basis = [y for r in reps for y in r.basis]
    n = len(basis)
    offsets = np.cumsum([0] + [r.dim for r in reps])
    action = {}
    for r, start in zip(reps, offsets):
        for beta, m in r.action.items():
            block = action.setdefault(beta, field.zeros(n, n))
            block[start:start + r.dim, start:start + r.dim] = m
    total = HatRep(rq, basis, action, field, name)
    injections, projections = [], []
    for r, start in zip(reps, offsets):
        inj = field.zeros(n, r.dim)
        for k in range(r.dim):
            inj[start + k, k] = 1
        injections.append(RepMap(r, total, inj))
        projections.append(RepMap(total, r, field.array(inj.T)))
    return total, injections, projections


def pushout(f, g):
    """Push-out of *M ←f A →g N*: the module and the maps from *M* and *N*."""
    total, (inj_m, inj_n), _ = direct_sum(f.target, g.target)
    field = f.field
    relations = field.sub(field.matmul(inj_m.matrix, f.matrix), field.matmul(inj_n.matrix, g.matrix))
    c, p = quotient(total, relations)
    return c, p @ inj_m, p @ inj_n


# Hom spaces {{{1
def hom_space(source, target):
    """A basis of the homomorphisms *source → target*."""
    field = source.field
    unknowns = [
        (i, j)
        for y in source.vertices
        for i in target.indices(y)
        for j in source.indices(y)
    ]
    if not unknowns:
        return []
    vertices = set(source.vertices) | set(target.vertices)
    keys = {}
    entries = []
    for beta in _arrows_among(source.rq, vertices):
        a_t, a_s = target.act(beta), source.act(beta)
        for col, (a, b) in enumerate(unknowns):
            for i in range(target.dim):
                if a_t[i, a]:
                    entries.append(((beta, i, b), col, a_t[i, a]))
            for j in range(source.dim):
                if a_s[b, j]:
                    entries.append(((beta, a, j), col, -a_s[b, j]))
    for key, _, _ in entries:
        keys.setdefault(key, len(keys))
    system = field.zeros(len(keys), len(unknowns))
    for key, col, value in entries:
        system[keys[key], col] = field.normalize(np.array([system[keys[key], col] + value]))[0]
    null = field.nullspace(system)
    basis = []
    for k in range(null.shape[1]):
        m = field.zeros(target.dim, source.dim)
        for col, (a, b) in enumerate(unknowns):
            m[a, b] = null[col, k]
        basis.append(RepMap(source, target, m))
    return basis


def _combine(basis, source, target):
    def combine(coefficients):
        total = RepMap(source, target)
        for c, f in zip(coefficients, basis):
            if c:
                total = total.add(f.scale(c))
        return total
    return combine


def find_module_isomorphism(source, target):
    """An isomorphism *source → target*, or *None*."""
    if source.dimension_vector() != target.dimension_vector():
        return None
    if not source.dim:
        return RepMap(source, target)
    basis = hom_space(source, target)
    return find_invertible(basis, _combine(basis, source, target), RepMap.is_isomorphism, source.field)


def is_isomorphic(source, target):
    return find_module_isomorphism(source, target) is not None


def is_indecomposable(rep):
    """True if the endomorphism ring is local.

    Every endomorphism of an indecomposable module is nilpotent or invertible;
    the test is exhaustive when the endomorphism space is small and sampled
    otherwise.
    """
    if not rep.dim:
        return False
    field = rep.field
    basis = hom_space(rep, rep)
    vectors = field.coefficient_vectors(
        len(basis),
        Settings.get_pref('exhaustive_limit'),
        Settings.get_pref('seed'),
        Settings.get_pref('max_attempts'),
    )
    combine = _combine(basis, rep, rep)
    for coefficients in vectors:
        e = combine(coefficients).matrix
        if field.is_invertible(e):
            continue
        if not field.is_zero(field.power(e, rep.dim)):
            return False
    return True


def has_retraction(f):
    """True if some *r* satisfies *r ∘ f = id*."""
    basis = hom_space(f.target, f.source)
    products = [(h @ f).matrix for h in basis]
    return f.field.in_span(products, f.field.identity(f.source.dim)) is not None


def is_exact(f, g):
    """True if *0 → A →f B →g C → 0* is exact."""
    return (
        (g @ f).is_zero()
        and f.is_injective()
        and g.is_surjective()
        and f.rank == f.target.dim - g.rank
    )


# projectives {{{1
def projective(rq, y, field=None):
    """The indecomposable projective *P_y*, with the path basis *Ξ*."""
    return projective_sum(rq, [y], field)


def projective_sum(rq, vertices, field=None, name=None):
    """*⊕ P_y*; its *summands* list *(vertex, paths, offset)*."""
    field = field or Settings.field()
    basis = []
    summands = []
    action = {}
    for y in vertices:
        paths = rq.paths_from(y)
        offset = len(basis)
        summands.append((y, paths, offset))
        basis.extend(p.target for p in paths)
    n = len(basis)
    for y, paths, offset in summands:
        index = {p.arrows: offset + i for i, p in enumerate(paths)}
        for i, p in enumerate(paths):
            for beta in rq.arrows_from(p.target):
                q = rq.path_compose(rq.path_of((beta,)), p)
                if q is None:
                    continue
                if q.arrows not in index:
                    raise IdentityFailure('product leaves the path basis', culprit=f'{beta} · {p}')
                block = action.setdefault(beta, field.zeros(n, n))
                block[index[q.arrows], offset + i] = 1
    if name is None:
        name = ' ⊕ '.join(f'P({y})' for y in vertices) or '0'
    rep = HatRep(rq, basis, action, field, name)
    rep.summands = summands
    return rep


def hom_from_projective(p, images, target):
    """The map from a sum of projectives that sends generator *i* to *images[i]*."""
    field = target.field
    matrix = field.zeros(target.dim, p.dim)
    for (y, paths, offset), v in zip(p.summands, images):
        v = field.array(np.asarray(v).reshape(-1))
        for k, path in enumerate(paths):
            matrix[:, offset + k] = field.matmul(target.act_path(path), v)
    return RepMap(p, target, matrix)


def _unit(field, n, i):
    v = field.zeros(n, 1)[:, 0]
    v[i] = 1
    return field.array(v)


def radical(rep):
    """A basis of the radical: the span of the images of the arrows."""
    field = rep.field
    return _homogeneous(rep, _hstack(field, rep.dim, [rep.act(beta) for beta in rep.arrows()]))


def top_generators(rep):
    """Vertex-homogeneous vectors whose classes form a basis of the top."""
    field = rep.field
    rad = radical(rep)
    generators = []
    for y in rep.vertices:
        idx = rep.indices(y)
        current = rad[idx, :]
        current = current[:, [k for k in range(current.shape[1]) if not field.is_zero(current[:, k])]]
        for i in idx:
            unit = _unit(field, rep.dim, i)
            trial = field.array(np.column_stack([current, unit[idx]])) if current.size \
                else field.array(unit[idx].reshape(-1, 1))
            if field.rank(trial) > field.rank(current):
                current = trial
                generators.append((y, unit))
    return generators


Syzygy = namedtuple('Syzygy', 'module inclusion cover projection')


def projective_cover(rep):
    """The projective cover *π : P → M*."""
    generators = top_generators(rep)
    p = projective_sum(rep.rq, [y for y, _ in generators], rep.field)
    return p, hom_from_projective(p, [v for _, v in generators], rep)


def syzygy(rep):
    """*Ω M*, the kernel of the projective cover."""
    p, pi = projective_cover(rep)
    k, inclusion = kernel(pi)
    k.name = f'Ω({rep})'
    return Syzygy(k, inclusion, p, pi)


def omega_on_map(f, source=None, target=None):
    """*Ω f*: lift *f* to the projective covers and restrict to the kernels.

    *source* and *target* are the :class:`Syzygy` records of the two ends;
    they are computed when not given.
    """
    field = f.field
    source = source or syzygy(f.source)
    target = target or syzygy(f.target)
    lifts = []
    for y, _, offset in source.cover.summands:
        wanted = field.matmul(f.matrix, source.projection.matrix[:, offset])
        idx = target.cover.indices(y)
        w = field.zeros(target.cover.dim, 1)[:, 0]
        if idx:
            x = field.solve(target.projection.matrix[:, idx], wanted)
            if x is None:
                raise IdentityFailure('map does not lift to the cover', culprit=str(f))
            w[idx] = x
        elif not field.is_zero(wanted):
            raise IdentityFailure('map does not lift to the cover', culprit=str(f))
        lifts.append(field.array(w))
    lift = hom_from_projective(source.cover, lifts, target.cover)
    restricted = field.solve(target.inclusion.matrix, field.matmul(lift.matrix, source.inclusion.matrix))
    if restricted is None:
        raise IdentityFailure('lift does not preserve the syzygies', culprit=str(f))
    return RepMap(source.module, target.module, restricted)


# injectives {{{1
def socle(rep, y):
    """A basis of the socle at *y*, in the coordinates of *M_y*."""
    field = rep.field
    idx = rep.indices(y)
    rows = [rep.act(beta)[:, idx] for beta in rep.rq.arrows_from(y) if beta in rep.action]
    if not rows:
        return field.identity(len(idx))
    return field.nullspace(field.array(np.vstack(rows)))


def _functional_map(rep, y, functional, q):
    """Column block of *M → Q_y ≅ P_{νy}* given by a functional on *M_y*."""
    rq, field = rep.rq, rep.field
    _, paths, offset = q
    idx = rep.indices(y)
    rows = field.zeros(len(paths), rep.dim)
    for k, p in enumerate(paths):
        xi = rq.nu(xi_star(rq, p), -1)
        if xi.target != y:
            raise IdentityFailure('dual path misses its vertex', culprit=str(p))
        rows[k, :] = field.matmul(field.array(functional.reshape(1, -1)), rep.act_path(xi)[idx, :])[0]
    return rows


def envelope_from_functionals(rep, functionals):
    """*M → ⊕ Q_{y_i}* given by functionals *(y_i, φ_i)* on *M_{y_i}*."""
    rq, field = rep.rq, rep.field
    q = projective_sum(rq, [rq.nu(y) for y, _ in functionals], field)
    matrix = field.zeros(q.dim, rep.dim)
    for (y, phi), summand in zip(functionals, q.summands):
        _, paths, offset = summand
        matrix[offset:offset + len(paths), :] = _functional_map(rep, y, phi, summand)
    return RepMap(rep, q, matrix).check()


def injective_envelope(rep):
    """The injective envelope *ι : M → I*, with *Q_y ≅ P_{νy}*."""
    field = rep.field
    functionals = []
    for y in rep.vertices:
        s = socle(rep, y)
        if not s.shape[1]:
            continue
        phi = field.solve(field.array(s.T), field.identity(s.shape[1]))
        for k in range(s.shape[1]):
            functionals.append((y, field.array(phi[:, k])))
    iota = envelope_from_functionals(rep, functionals)
    return iota.target, iota


def cosyzygy(rep):
    """*Ω⁻¹ M*, the cokernel of the injective envelope."""
    _, iota = injective_envelope(rep)
    c, p = cokernel(iota)
    c.name = f'Ω⁻¹({rep})'
    return c, iota, p


def strip_projective_injectives(rep):
    """Remove every projective-injective summand.

    Returns the reduced module and the number of summands removed.
    """
    rq, field = rep.rq, rep.field
    removed = 0
    while True:
        found = None
        for y in rep.vertices:
            action = rep.act_path(rq.chosen_full_path(y))
            for i in rep.indices(y):
                if not field.is_zero(action[:, i]):
                    found = i
                    break
            if found is not None:
                break
        if found is None:
            return rep, removed
        rep, _ = quotient(rep, [_unit(field, rep.dim, found)])
        removed += 1


# string and band representations {{{1
def string_module(zeta, field=None):
    """*V_ζ*: basis *e_0 … e_ℓ* along the walk, identities on the letters.

    >>> from gentlear import bundled, RepQuiver, parse_hat_string, string_module
    >>> v = string_module(parse_hat_string(RepQuiver(bundled('Q1')), 'a[0]'))
    >>> print(v, v.dim)
    V(a[0]) 2

    """
    zeta = as_hat_string(zeta)
    field = field or Settings.field()
    basis = zeta.vertices
    n = len(basis)
    action = {}
    for j, letter in enumerate(zeta.letters, 1):
        m = action.setdefault(letter.arrow, field.zeros(n, n))
        if letter.inverse:
            m[j, j-1] += 1
        else:
            m[j-1, j] += 1
    return HatRep(zeta.quiver, basis, action, field, f'V({zeta})')


def band_module(omega, mu, field=None):
    """*W_{ω,μ}*: positions *1 … ℓ*, identities on the letters and *μ* on *α₁*.

    :raises NotABand(GentleError, ValueError): *ω* is not a band.
    """
    omega = as_hat_string(omega)
    if not is_band(omega):
        raise NotABand(str(omega))
    mu = as_automorphism(mu, field)
    field = mu.field
    n, length = mu.dim, len(omega)
    vertices = omega.vertices
    basis = [vertices[i] for i in range(1, length + 1) for _ in range(n)]
    size = len(basis)

    def block(i):
        start = ((i if i else length) - 1) * n
        return slice(start, start + n)

    action = {}
    for j, letter in enumerate(omega.letters, 1):
        m = action.setdefault(letter.arrow, field.zeros(size, size))
        coefficient = mu.matrix if j == 1 else field.identity(n)
        if letter.inverse:
            m[block(j), block(j - 1)] = field.add(m[block(j), block(j - 1)], coefficient)
        else:
            m[block(j - 1), block(j)] = field.add(m[block(j - 1), block(j)], coefficient)
    return HatRep(omega.quiver, basis, action, field, f'W({omega}, {mu})')


# structural maps {{{2
def upsilon_map(zeta, field=None):
    """*υ_ζ : V_ζ → V_{ζ⁻¹}*, *e_i ↦ e_{ℓ−i}*."""
    zeta = as_hat_string(zeta)
    source = string_module(zeta, field)
    target = string_module(zeta.inverse(), field)
    n = source.dim
    m = source.field.zeros(n, n)
    for i in range(n):
        m[n - 1 - i, i] = 1
    return RepMap(source, target, m, name=f'υ({zeta})')


def f_map(first, second, field=None):
    """*f_{ζ′,ζ″}*: *e_i ↦ e_i* on the common prefix.

    :raises WalkError(GentleError, ValueError): *ζ′ ≤_t ζ″* fails.
    """
    first, second = as_hat_string(first), as_hat_string(second)
    if not leq_t(first, second):
        raise WalkError('not ordered by ≤_t', culprit=f'{first}, {second}')
    source = string_module(first, field)
    target = string_module(second, field)
    m = source.field.zeros(target.dim, source.dim)
    for i in range(common_prefix_length(first, second) + 1):
        m[i, i] = 1
    return RepMap(source, target, m, name=f'f({first}, {second})')


def g_map(first, second, field=None):
    """*g_{ζ′,ζ″} = υ_{ζ″⁻¹} ∘ f_{ζ′⁻¹,ζ″⁻¹} ∘ υ_{ζ′}*.

    :raises WalkError(GentleError, ValueError): *ζ′ ≤_s ζ″* fails.
    """
    first, second = as_hat_string(first), as_hat_string(second)
    if not leq_s(first, second):
        raise WalkError('not ordered by ≤_s', culprit=f'{first}, {second}')
    inner = f_map(first.inverse(), second.inverse(), field)
    result = upsilon_map(second.inverse(), field) @ inner @ upsilon_map(first, field)
    result.source = string_module(first, field)
    result.target = string_module(second, field)
    result.name = f'g({first}, {second})'
    return result


# the printed presentation of a string representation {{{2
def peaks(zeta):
    """Positions of *ζ* whose basis vectors generate *V_ζ*."""
    letters = as_hat_string(zeta).letters
    n = len(letters)
    return [
        p for p in range(n + 1)
        if (p == 0 or not letters[p-1].inverse) and (p == n or letters[p].inverse)
    ]


def valleys(zeta):
    """Positions of *ζ* whose basis vectors span the socle of *V_ζ*."""
    letters = as_hat_string(zeta).letters
    n = len(letters)
    return [
        p for p in range(n + 1)
        if (p == 0 or letters[p-1].inverse) and (p == n or not letters[p].inverse)
    ]


def string_cover(zeta, field=None):
    """*π_ζ : P_ζ → V_ζ*, one summand *P_{s ξ_{2i−1}}* per peak."""
    v = string_module(zeta, field)
    positions = peaks(zeta)
    p = projective_sum(v.rq, [v.basis[i] for i in positions], v.field)
    return hom_from_projective(p, [_unit(v.field, v.dim, i) for i in positions], v)


def iota(zeta, field=None):
    """*ι_ζ : V_{Δ⁻¹ζ} → P_ζ*, with the functionals *(−1)^i e*_{l′_i}*."""
    from .repetitive import Delta_inverse
    lower = Delta_inverse(as_hat_string(zeta))
    w = string_module(lower, field)
    functionals = []
    for i, position in enumerate(valleys(lower), 1):
        phi = w.field.zeros(1, len(w.indices(w.basis[position])))[0]
        phi[w.indices(w.basis[position]).index(position)] = (-1) ** i
        functionals.append((w.basis[position], w.field.array(phi)))
    return envelope_from_functionals(w, functionals)


def string_sequence(zeta, field=None):
    """The maps of *0 → V_{Δ⁻¹ζ} → P_ζ → V_ζ → 0*.

    :raises IdentityFailure(GentleError, AssertionError):
        *P_ζ* and the injective envelope have different summands.
    """
    pi = string_cover(zeta, field)
    i = iota(zeta, field)
    if [s[0] for s in i.target.summands] != [s[0] for s in pi.source.summands]:
        raise IdentityFailure('cover and envelope disagree', culprit=str(zeta))
    i.target = pi.source
    return i, pi


# Auslander–Reiten sequences {{{1
ARSequence = namedtuple('ARSequence', 'strings start middle end left right')


def _aligned(first, second, end, field):
    """Map *V_ζ′ → V_ζ″* matching the common part at the given end."""
    source = string_module(first, field)
    target = string_module(second, field)
    m = source.field.zeros(target.dim, source.dim)
    k = min(source.dim, target.dim)
    for i in range(k):
        if end == 't':
            m[i, i] = 1
        else:
            m[target.dim - 1 - i, source.dim - 1 - i] = 1
    return RepMap(source, target, m)


def hat_ar_sequence(zeta, field=None):
    """The almost split sequence *V_ζ → V_{₊ζ} ⊕ V_{ζ₊} → V_{₊ζ₊}*.

    Absent neighbours contribute nothing to the middle term.
    """
    zeta = as_hat_string(zeta)
    left, right = hat_plus_left(zeta), hat_plus_right(zeta)
    both = hat_plus_both(zeta)
    start = string_module(zeta, field)
    end = string_module(both, field)
    firsts, seconds = [], []
    if left is not None:
        firsts.append(_aligned(zeta, left, 's', field))
        seconds.append(_aligned(left, both, 't', field))
    if right is not None:
        firsts.append(_aligned(zeta, right, 't', field))
        seconds.append(_aligned(right, both, 's', field).neg())
    middle, injections, projections = direct_sum(*(f.target for f in firsts))
    into = RepMap(start, middle)
    for f, inj in zip(firsts, injections):
        into = into.add(inj @ f)
    out = RepMap(middle, end)
    for g, proj in zip(seconds, projections):
        out = out.add(g @ proj)
    into.source, out.target = start, end
    return ARSequence((zeta, left, right, both), start, middle, end, into, out)


def certify_ar_sequence(sequence):
    """Check exactness, non-splitness and indecomposable ends.

    :raises IdentityFailure(GentleError, AssertionError): a check fails.
    """
    culprit = str(sequence.strings[0])
    sequence.left.check()
    sequence.right.check()
    if not is_exact(sequence.left, sequence.right):
        raise IdentityFailure('sequence is not exact', culprit=culprit)
    if has_retraction(sequence.left):
        raise IdentityFailure('sequence splits', culprit=culprit)
    for m in (sequence.start, sequence.end):
        if not is_indecomposable(m):
            raise IdentityFailure('end term decomposes', culprit=culprit, details=str(m))
    return True


# syzygies of string and band representations {{{1
def string_syzygy_matches(zeta, field=None):
    """True if *Ω V_ζ ≅ V_{Δ⁻¹ζ}*."""
    from .repetitive import Delta_inverse
    zeta = as_hat_string(zeta)
    omega = syzygy(string_module(zeta, field)).module
    return is_isomorphic(omega, string_module(Delta_inverse(zeta), field))


def band_syzygy(zeta, mu, field=None):
    """Compare *Ω W_{ζ,μ}* with *W_{ζ^+, (−1)^{L/2} μ⁻¹}*.

    Returns the parameter that matched; the printed one is tried first and
    the other signs and inversions follow with a narration.

    :raises IdentityFailure(GentleError, AssertionError): no parameter matches.
    """
    from .repetitive import plus
    zeta = as_hat_string(zeta)
    mu = as_automorphism(mu, field)
    omega = syzygy(band_module(zeta, mu)).module
    lifted = plus(zeta)
    sign = (-1) ** (zeta.L // 2)
    candidates = [
        mu.inverse().scale(sign), mu.inverse().scale(-sign), mu.scale(sign), mu.scale(-sign),
    ]
    for k, candidate in enumerate(candidates):
        if is_isomorphic(omega, band_module(lifted, candidate)):
            if k:
                narrate(f'Ω {band_module(zeta, mu)} matched {candidate} instead of {candidates[0]}')
            return candidate
    raise IdentityFailure('Ω W does not match', culprit=f'{zeta}, {mu}')


# the inclusion of representations of the base quiver {{{1
def base_projective_sum(rq, summands, layer=0, field=None):
    """*⊕ P_x ⊗ k^n* of the base quiver, placed in one layer.

    *summands* yields *(vertex, multiplicity)* pairs.  Returns the
    representation and the list of *(offset, paths, multiplicity)* blocks.
    """
    summands = list(summands)
    field = field or Settings.field()
    base = rq.base
    basis = []
    blocks = []
    for x, dim in summands:
        paths = base.projective_paths(x)
        blocks.append((len(basis), paths, dim))
        for _ in range(dim):
            basis.extend(HatVertex(p.target, layer) for p in paths)
    n = len(basis)
    action = {}
    for (offset, paths, dim), (x, _) in zip(blocks, summands):
        for a in base.arrows:
            m = base.projective_action(x, a, field)
            if field.is_zero(m):
                continue
            block = action.setdefault(HatArrow(a, layer, False), field.zeros(n, n))
            for copy in range(dim):
                start = offset + copy * len(paths)
                block[start:start + len(paths), start:start + len(paths)] = m
    return HatRep(rq, basis, action, field), blocks


def base_path_matrix_map(d, source, source_blocks, target, target_blocks):
    """The module map of a :class:`~gentlear.PathMatrix` between included projectives."""
    field = source.field
    base = d.quiver
    matrix = field.zeros(target.dim, source.dim)
    for i, j, rho, c in d.items():
        t_offset, t_paths, t_dim = target_blocks[i]
        s_offset, s_paths, s_dim = source_blocks[j]
        p = base.path_map(rho, field)
        c = np.asarray(c)
        for a in range(t_dim):
            for b in range(s_dim):
                if not c[a, b]:
                    continue
                rows = slice(t_offset + a * len(t_paths), t_offset + (a + 1) * len(t_paths))
                cols = slice(s_offset + b * len(s_paths), s_offset + (b + 1) * len(s_paths))
                matrix[rows, cols] = field.add(matrix[rows, cols], field.scale(c[a, b], p))
    return RepMap(source, target, matrix)


# verification {{{1
def verify_repetitive(quiver, max_len=None, automorphisms=None):
    """Check the repetitive quiver, *Δ* and the syzygy identities.

    Runs the almost gentle checker on the windowed repetitive quiver, then
    for every string *ζ* with *t ζ* in layer 0 checks *Δ⁻¹Δζ = ζ*, the
    exactness of *0 → V_{Δ⁻¹ζ} → P_ζ → V_ζ → 0* and *Ω V_ζ ≅ V_{Δ⁻¹ζ}*;
    bands get the band syzygy check.  Returns a
    :class:`collections.Counter` of passed checks.

    :raises IdentityFailure(GentleError, AssertionError): a check fails.
    """
    from .complexes import jordan
    from .repetitive import Delta, Delta_inverse, enumerate_hat_strings, repetitive_quiver
    max_len = Settings.get_pref('max_len') if max_len is None else max_len
    if automorphisms is None:
        automorphisms = [jordan(1, 1), jordan(1, 2)]
    rq = repetitive_quiver(quiver)
    report = Counter()
    violations = rq.check_almost_gentle()
    if violations:
        raise IdentityFailure('repetitive quiver is not almost gentle', culprit=rq.name, details=str(violations))
    report['almost gentle'] += 1
    for zeta in enumerate_hat_strings(rq, max_len):
        culprit = str(zeta)
        if Delta_inverse(Delta(zeta)) != zeta:
            raise IdentityFailure('Δ⁻¹Δζ ≠ ζ', culprit=culprit)
        report['Δ⁻¹Δ = id'] += 1
        inclusion, cover = string_sequence(zeta)
        if not is_exact(inclusion, cover):
            raise IdentityFailure('syzygy sequence is not exact', culprit=culprit)
        report['syzygy sequence'] += 1
        if not string_syzygy_matches(zeta):
            raise IdentityFailure('Ω V_ζ ≇ V_{Δ⁻¹ζ}', culprit=culprit)
        report['Ω V'] += 1
        if zeta.letters and is_band(zeta):
            for mu in automorphisms:
                band_syzygy(zeta, mu)
                report['Ω W'] += 1
    narrate(f'{quiver.name}: repetitive layer verified', dict(report))
    return report
