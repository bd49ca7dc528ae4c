# encoding: utf8

# Description {{{1
"""
The strings of the repetitive quiver that correspond to string and band
complexes under the Happel functor.

:func:`psi` sends a homotopy string *ω* of the base quiver to the string *ψω*
of the repetitive quiver with *Ψ X_{m,ω} ≅ V_{Δ^{−m}(ψω)}*, and
:func:`psi_prime` gives the band counterpart *ψ′*::

    >>> from gentlear import bundled, parse_homotopy_string, psi
    >>> q1 = bundled('Q1')
    >>> print(psi(parse_homotopy_string(q1, 'a')))
    a*[-1]-
    >>> print(psi(parse_homotopy_string(q1, '1:(1,+)')))
    a[0]

:func:`happel_oracle` computes *Ψ X* independently, as an iterated cone of
syzygies of stalk complexes evaluated in the stable category of the
repetitive algebra.
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
from .complexes import as_automorphism, band_complex, jordan, string_complex
from .homotopy import (
    as_homotopy_string, enumerate_homotopy_bands, enumerate_homotopy_strings,
    hstring_compose, is_homotopy_band, sigma_omega,
)
from .modules import (
    RepMap, band_module, base_path_matrix_map, base_projective_sum,
    hom_space, is_isomorphic, pushout, string_module,
    strip_projective_injectives, syzygy, zero_rep, omega_on_map,
)
from .repetitive import (
    Delta_power, compose, delta_s_dblprime, delta_s_prime, lift,
    partial_prime, plus, repetitive_quiver, times, times_power, widening,
)
from .strings import is_band, substring_t


# ψ {{{1
PsiStep = namedtuple('PsiStep', 'walk case result')


class PsiResult(namedtuple('PsiResult', 'string trace')):
    """*ψω* together with the branch taken at every step of the recursion.

    The trace lists :class:`PsiStep` records innermost first, so the last
    step belongs to *ω* itself.
    """
    __slots__ = ()

    def __str__(self):
        return str(self.string)

    def lines(self):
        return [f'ψ({s.walk}) = {s.result}    [{s.case}]' for s in self.trace]


def _rq(omega, rq):
    return rq or repetitive_quiver(omega.quiver)


def _psi(rq, omega, trace):
    omega = as_homotopy_string(omega)
    lead = lift(rq, sigma_omega(omega))
    context = f'ψ({omega})'
    if omega.L == 0:
        tail = lift(rq, sigma_omega(as_homotopy_string(omega.inverse()))).inverse()
        result = compose(lead, tail, context=context)
        trace.append(PsiStep(omega, 'base', result))
        return result
    sigma = omega.piece(1)
    zeta = partial_prime(_psi(rq, omega.suffix(1), trace))
    if omega.piece_is_path(1):
        case = 'path'
        result = compose(lead, plus(lift(rq, sigma)), delta_s_dblprime(plus(zeta)), context=context)
    elif zeta.letters:
        case = 'inverse path'
        result = compose(lead, lift(rq, sigma), delta_s_prime(times(zeta)), context=context)
    else:
        case = 'inverse path, trivial tail'
        result = compose(lead, lift(rq, substring_t(sigma, len(sigma) - 1)), context=context)
    trace.append(PsiStep(omega, case, result))
    return result


def psi(omega, rq=None):
    """*ψω*, returned as a :class:`PsiResult`.

    :raises IdentityFailure(GentleError, AssertionError):
        a composition in the recursion is undefined.
    """
    def compute(rq):
        trace = []
        return PsiResult(_psi(rq, omega, trace), tuple(trace))
    return widening(compute, _rq(omega, rq))


def psi_trace(omega, rq=None):
    """The recursion of *ψω* as text, one line per step."""
    return psi(omega, rq).lines()


def replay(result, rq=None):
    """Recompute every step of a trace and compare.

    :raises IdentityFailure(GentleError, AssertionError): a step differs.
    """
    for step in result.trace:
        again = psi(step.walk, rq).string
        if again != step.result:
            raise IdentityFailure('trace does not replay', culprit=str(step.walk), details=f'{again} ≠ {step.result}')
    return True


# ψ′ {{{1
def _psi_prime(rq, omega):
    sigma = lift(rq, omega.piece(1))
    path = omega.piece_is_path(1)
    first = plus(sigma) if path else sigma
    if omega.L == 1:
        return first
    rest = _psi_prime(rq, omega.suffix(1))
    return compose(first, plus(rest) if path else times(rest), context=f"ψ′({omega})")


def exponents(omega):
    """The powers *n_i* of *×* in the closed form of *ψ′ω*."""
    omega = as_homotopy_string(omega)
    return [
        -omega.degrees[i] - (0 if omega.piece_is_path(i) else 1)
        for i in range(1, omega.L + 1)
    ]


def _psi_prime_closed(rq, omega):
    pieces = [
        times_power(lift(rq, omega.piece(i)), n)
        for i, n in enumerate(exponents(omega), 1)
    ]
    return compose(*pieces, context=f"ψ′({omega}) closed form")


def psi_prime(omega, rq=None):
    """*ψ′ω*; the recursion and the closed form are both evaluated.

    :raises WalkError(GentleError, ValueError): *ω* has length zero.
    :raises IdentityFailure(GentleError, AssertionError):
        the recursion and the closed form disagree.
    """
    omega = as_homotopy_string(omega)
    if not omega.letters:
        raise WalkError('ψ′ needs a walk of positive length', culprit=str(omega))

    def compute(rq):
        recursive = _psi_prime(rq, omega)
        closed = _psi_prime_closed(rq, omega)
        if recursive != closed:
            raise IdentityFailure(
                'closed form of ψ′ disagrees with the recursion',
                culprit=str(omega), details=f'{recursive} ≠ {closed}',
            )
        return recursive
    return widening(compute, _rq(omega, rq))


BandImage = namedtuple('BandImage', 'string exponent')


def psi_band(omega, rq=None):
    """*ψ′ω* of a homotopy band with the power *ε* of *μ* in *W_{ψ′ω, ±μ^ε}*.

    :raises NotABand(GentleError, ValueError): *ω* is not a homotopy band.
    :raises IdentityFailure(GentleError, AssertionError): *ψ′ω* is not a band.
    """
    omega = as_homotopy_string(omega)
    if not omega.letters or not is_homotopy_band(omega):
        raise NotABand(str(omega))
    image = psi_prime(omega, rq)
    if not is_band(image):
        raise IdentityFailure('ψ′ of a band is not a band', culprit=str(omega), details=str(image))
    return BandImage(image, 1 if omega.piece_is_path(1) else -1)


# the oracle {{{1
HappelImage = namedtuple('HappelImage', 'module removed')


def _lift_through(q, cover, phi0):
    """A map *φ* with *q ∘ φ ≡ φ₀* modulo maps through the projective cover."""
    field = phi0.field
    source = phi0.source
    through_q = hom_space(source, q.source)
    through_cover = hom_space(source, cover.source)
    vectors = [(q @ h).matrix for h in through_q] + [(cover @ u).matrix for u in through_cover]
    coefficients = field.in_span(vectors, phi0.matrix)
    if coefficients is None:
        raise IdentityFailure('differential does not lift to the truncation', culprit=str(phi0))
    phi = RepMap(source, q.source)
    for c, h in zip(coefficients, through_q):
        if c:
            phi = phi.add(h.scale(c))
    return phi


def _happel(rq, x):
    field = x.field
    degrees = x.degrees
    if not degrees:
        return HappelImage(zero_rep(rq, field), 0)
    lo, hi = degrees[0], degrees[-1]
    if lo < 0:
        raise WalkError('shift the complex into nonnegative degrees', culprit=x.name or 'complex')

    # N_k = Ω^k X^k with the syzygy records Ω^j X^k for j ≤ k + 1
    terms, blocks, chains = {}, {}, {}
    for k in range(lo, hi + 1):
        terms[k], blocks[k] = base_projective_sum(rq, [(s.vertex, s.dim) for s in x.term(k)], 0, field)
        chain = []
        current = terms[k]
        for _ in range(k + 1):
            record = syzygy(current)
            chain.append(record)
            current = record.module
        chains[k] = chain

    def stalk_image(k):
        return chains[k][k - 1].module if k else terms[k]

    module = stalk_image(hi)
    truncation = RepMap(module, module, field.identity(module.dim))
    for k in range(hi - 1, lo - 1, -1):
        below = chains[k][k]
        phi0 = base_path_matrix_map(x.d(k), terms[k], blocks[k], terms[k + 1], blocks[k + 1])
        for j in range(k + 1):
            phi0 = omega_on_map(phi0, chains[k][j], chains[k + 1][j])
        phi = _lift_through(truncation, chains[k + 1][k + 1].projection, phi0)
        cone, from_module, from_cover = pushout(phi, below.inclusion)
        onto = np.hstack([from_module.matrix, from_cover.matrix])
        wanted = np.hstack([field.zeros(below.projection.target.dim, module.dim), below.projection.matrix])
        section = field.solve(field.array(onto), field.identity(cone.dim))
        if section is None:
            raise IdentityFailure('push-out projection is not surjective', culprit=x.name or 'complex')
        truncation = RepMap(cone, below.projection.target, field.matmul(field.array(wanted), section))
        module = cone
        narrate(f'  cone at degree {k}: dimension {module.dim}')
    module, removed = strip_projective_injectives(module)
    return HappelImage(module, removed)


def happel_oracle(x, rq=None):
    """*Ψ X* for a complex of projectives in nonnegative degrees.

    Stalks are included as representations of layer 0; *X* is rebuilt from
    its brutal truncations as iterated cones, each cone being a push-out
    along an embedding into a projective-injective.  Projective-injective
    summands are removed from the result.

    :raises WalkError(GentleError, ValueError): *X* has negative degrees.
    :raises IdentityFailure(GentleError, AssertionError):
        a differential does not lift to the truncation.
    """
    return widening(_happel, rq or repetitive_quiver(x.quiver), x)


def normalizing_shift(omega):
    """The least *c* for which *X_{c,ω}* sits in nonnegative degrees."""
    return -min(as_homotopy_string(omega).degrees)


def string_oracle(omega, m=None, rq=None):
    """Compare *Ψ X_{m,ω}* with *V_{Δ^{−m}(ψω)}*.

    *m* defaults to :func:`normalizing_shift`.  Returns the expected string.

    :raises IdentityFailure(GentleError, AssertionError): they differ.
    """
    omega = as_homotopy_string(omega)
    m = normalizing_shift(omega) if m is None else m

    def compute(rq):
        expected = Delta_power(psi(omega, rq).string, -m)
        image = _happel(rq, string_complex(m, omega)).module
        if not is_isomorphic(image, string_module(expected)):
            raise IdentityFailure(
                'Ψ X differs from V(Δ^{-m} ψ ω)', culprit=f'X({m}, {omega})',
                details=f'{image} ≇ V({expected})',
            )
        return expected
    return widening(compute, _rq(omega, rq))


def band_oracle(omega, mu, rq=None):
    """Match *Ψ Y_{c,ω,μ}* with a band representation.

    Tries *W_{(ψ′ω)^{×(−c)}, ±μ^{±1}}*, starting from the sign and power
    predicted by the band proposition, and returns the parameter that fits.

    :raises IdentityFailure(GentleError, AssertionError): nothing fits.
    """
    omega = as_homotopy_string(omega)
    mu = as_automorphism(mu)
    m = normalizing_shift(omega)

    def compute(rq):
        image = psi_band(omega, rq)
        shifted = times_power(image.string, -m)
        y = _happel(rq, band_complex(m, omega, mu)).module
        first = mu if image.exponent * (-1) ** m > 0 else mu.inverse()
        other = mu.inverse() if first is mu else mu
        for candidate in (first, first.scale(-1), other, other.scale(-1)):
            if is_isomorphic(y, band_module(shifted, candidate)):
                return candidate
        raise IdentityFailure(
            'Ψ Y matches no band representation', culprit=f'Y({m}, {omega}, {mu})', details=str(y),
        )
    return widening(compute, _rq(omega, rq))


# verification {{{1
def verify_section5(quiver, max_len=None, oracle=True, bands=True, deltas=range(-3, 4)):
    """Check the identities of the Happel correspondence on an enumeration.

    Returns a :class:`collections.Counter` of passed checks.  The enumeration
    runs shortest walks first, so the first failure is a smallest one.

    :raises IdentityFailure(GentleError, AssertionError): an identity fails.
    """
    max_len = Settings.get_pref('max_len') if max_len is None else max_len
    rq = repetitive_quiver(quiver)
    report = Counter()
    images = {}
    walks = list(enumerate_homotopy_strings(quiver, max_len))
    for omega in walks:
        result = psi(omega, rq)
        zeta = result.string
        replay(result, rq)
        report['trace replays'] += 1

        # injectivity up to Δ
        for n in deltas:
            key = Delta_power(zeta, n)
            if key in images:
                other, k = images[key]
                raise IdentityFailure(
                    'ψ is not injective up to Δ', culprit=f'{omega}, {other}',
                    details=f'Δ^{n} ψ = Δ^{k} ψ',
                )
            images[key] = (omega, n)
        report['injective up to Δ'] += 1

        # inversion
        inverse = as_homotopy_string(omega.inverse())
        if zeta.inverse() != Delta_power(psi(inverse, rq).string, -omega.deg):
            raise IdentityFailure('(ψω)⁻¹ ≠ Δ^{-deg ω} ψ(ω⁻¹)', culprit=str(omega))
        report['inversion'] += 1

        if omega.letters:
            psi_prime(omega, rq)
            report['ψ′ closed form'] += 1

        if omega.letters and omega.deg == 0:
            head = lift(rq, sigma_omega(omega))
            tail = lift(rq, sigma_omega(inverse)).inverse()
            if zeta != compose(head, psi_prime(omega, rq), tail):
                raise IdentityFailure('ψω ≠ σ_ω ψ′ω (σ_{ω⁻¹})⁻¹', culprit=str(omega))
            report['ψ via ψ′'] += 1
            if psi_prime(inverse, rq) != psi_prime(omega, rq).inverse():
                raise IdentityFailure('ψ′(ω⁻¹) ≠ (ψ′ω)⁻¹', culprit=str(omega))
            report['ψ′ inversion'] += 1
            for other in walks:
                if len(omega) + len(other) > max_len:
                    continue
                joined = hstring_compose(omega, other)
                if joined is None:
                    continue
                expected = compose(head, psi_prime(omega, rq), partial_prime(psi(other, rq).string))
                if psi(joined, rq).string != expected:
                    raise IdentityFailure('ψ(ωω′) ≠ σ_ω ψ′ω ∂′ψω′', culprit=f'{omega}, {other}')
                report['concatenation'] += 1
                if other.letters:
                    if psi_prime(joined, rq) != compose(psi_prime(omega, rq), psi_prime(other, rq)):
                        raise IdentityFailure('ψ′(ωω′) ≠ ψ′ω ψ′ω′', culprit=f'{omega}, {other}')
                    report['ψ′ concatenation'] += 1

        if oracle:
            c = normalizing_shift(omega)
            for m in (c, c + 1):
                string_oracle(omega, m, rq)
                report['oracle'] += 1
    if bands:
        for omega in enumerate_homotopy_bands(quiver, max_len):
            for mu in (jordan(1, 1), jordan(1, 2)):
                if oracle:
                    band_oracle(omega, mu, rq)
                    report['band oracle'] += 1
                else:
                    psi_band(omega, rq)
                    report['ψ′ band'] += 1
    narrate(f'{quiver.name}: Happel correspondence verified', dict(report))
    return report
