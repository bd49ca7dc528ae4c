# encoding: utf8

# Description {{{1
"""
Command line interface.

::

    gentlear validate --quiver Q2
    gentlear ar --quiver Q1 --m 0 --walk '1:(2,-)' --checked
    gentlear component --quiver Q1 --walk '1:(1,+)' --steps 6 --format dot
    gentlear selftest --quiver Q1 --format json

Every subcommand accepts the common options *--quiver* (a bundled name or a
quiver file), *--field*, *--checked*, *--format*, *--max-len*, *--margin*,
*--verbose* and *--output*.  The options are mapped onto the preferences of
:class:`~gentlear.Settings` for the duration of the command.
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
import argparse
from collections import namedtuple
from fractions import Fraction
import json
from pathlib import Path
from inform import Inform, display, done, error, narrate, os_error, terminate_if_errors
from .core import GentleError, IdentityFailure, Settings, WalkError, __version__
from .quiver import (
    BoundQuiver, bundled, check_string_functions, require_gentle, validate_gentle,
)
from .strings import sign_table
from .homotopy import (
    enumerate_homotopy_strings, is_homotopy_band, parse_homotopy_string, require_band,
)
from .complexes import band_complex, jordan, string_complex, verify_complexes
from .repetitive import (
    Delta, Delta_inverse, hat_plus_left, hat_plus_right, hat_plus_both,
    parse_hat_string, repetitive_quiver, require_hat_string,
)
from .modules import string_module, string_syzygy_matches, verify_repetitive
from .happel import psi, psi_band, string_oracle, band_oracle, verify_section5
from .ar import (
    BandObject, StringObject, ar_component, ar_triangle_band, ar_triangle_string,
    emit_component, verify_section6,
)


# RunConfig {{{1
RunConfig = namedtuple('RunConfig', 'quiver field max_len margin checked format')


def run_config(args):
    """Collect the common options; *max_len* and *margin* must not be negative."""
    for name in ('max_len', 'margin'):
        value = getattr(args, name)
        if value is not None and value < 0:
            raise WalkError('must not be negative', culprit=f'--{name.replace("_", "-")}')
    return RunConfig(args.quiver, args.field, args.max_len, args.margin, args.checked, args.format)


def preferences(config):
    prefs = dict(field=config.field, max_len=config.max_len, margin=config.margin)
    prefs = {k: v for k, v in prefs.items() if v is not None}
    if config.checked:
        prefs['checked'] = True
    return prefs


# helpers {{{1
def load_quiver(name):
    """A bundled quiver (``Q1``, ``Q2``, ``Q3``) or a quiver file."""
    if name.upper() in ('Q1', 'Q2', 'Q3'):
        return bundled(name.upper())
    return BoundQuiver.from_file(name)


def parse_scalar(text):
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value


def parse_jordan(text):
    """Read ``n,λ`` as the Jordan block *J_n(λ)*."""
    try:
        n, lam = text.split(',')
        n = int(n)
        if n < 1:
            raise ValueError
        return jordan(n, parse_scalar(lam))
    except ValueError:
        raise WalkError('expected n,λ with n ≥ 1', culprit=text) from None


def parse_window(text):
    try:
        lo, hi = (int(v) for v in text.split(':'))
    except ValueError:
        raise WalkError('expected m0:m1', culprit=text) from None
    return lo, hi


def render(data, text, config):
    if config.format == 'json':
        return json.dumps(data, indent=2, ensure_ascii=False) + '\n'
    return text if text.endswith('\n') else text + '\n'


def _walk(q, args):
    if args.band:
        return require_band(parse_homotopy_string(q, args.band))
    if args.walk is None:
        raise WalkError('give --walk or --band')
    return parse_homotopy_string(q, args.walk)


# commands {{{1
def cmd_validate(q, args, config):
    report = validate_gentle(q)
    lines = [f'{q.name}: {report}']
    data = dict(quiver=q.name, gentle=report.is_gentle, violations=str(report) if report else [])
    if report:
        error(str(report), culprit=q.name)
        return render(data, lines[0], config)
    signs = check_string_functions(q)
    if signs:
        error(str(signs), culprit=q.name)
    table = sign_table(q)
    chain = table.is_chain()
    if not chain:
        error('Σ tables are not chains', culprit=q.name)
    lines.append('string functions: ' + ', '.join(
        f'S({a})={q.S(a):+d} T({a})={q.T(a):+d}' for a in q.arrows
    ))
    lines.append(f"Σ tables: {'chains' if chain else 'not chains'}")
    data.update(
        S={str(a): q.S(a) for a in q.arrows},
        T={str(a): q.T(a) for a in q.arrows},
        string_functions=not signs,
        chains=chain,
    )
    return render(data, '\n'.join(lines), config)


def cmd_strings(q, args, config):
    walks = []
    for w in enumerate_homotopy_strings(q, Settings.get_pref('max_len')):
        band = bool(w.letters) and is_homotopy_band(w)
        if args.bands and not band:
            continue
        walks.append(dict(walk=str(w), L=w.L, deg=w.deg, band=band))
    text = '\n'.join(
        f"{w['walk']}    L={w['L']} deg={w['deg']}{'  band' if w['band'] else ''}" for w in walks
    )
    return render(dict(quiver=q.name, strings=walks), text, config)


def cmd_complex(q, args, config):
    w = _walk(q, args)
    if args.jordan:
        x = band_complex(args.m, require_band(w), parse_jordan(args.jordan))
    else:
        x = string_complex(args.m, w)
    x.check()
    return render(x.to_json(), x.to_text(), config)


def cmd_hatstring(q, args, config):
    rq = repetitive_quiver(q)
    zeta = require_hat_string(parse_hat_string(rq, args.walk))
    found = dict(
        string=zeta,
        Delta=Delta(zeta),
        Delta_inverse=Delta_inverse(zeta),
        plus_left=hat_plus_left(zeta),
        plus_right=hat_plus_right(zeta),
        plus_both=hat_plus_both(zeta),
    )
    data = {k: None if v is None else str(v) for k, v in found.items()}
    data['dimension_vector'] = string_module(zeta).to_json()['dimension_vector']
    if Settings.get_pref('checked'):
        data['syzygy_matches'] = string_syzygy_matches(zeta)
    text = '\n'.join(f'{k}: {"∅" if v is None else v}' for k, v in data.items())
    return render(data, text, config)


def cmd_psi(q, args, config):
    w = _walk(q, args)
    if args.band:
        image = psi_band(w)
        data = dict(walk=str(w), psi_prime=str(image.string), exponent=image.exponent)
        if args.jordan and Settings.get_pref('checked'):
            data['parameter'] = str(band_oracle(w, parse_jordan(args.jordan)))
        text = f"ψ′({w}) = {image.string}    exponent {image.exponent}"
        return render(data, text, config)
    result = psi(w)
    data = dict(walk=str(w), psi=str(result.string))
    lines = [f'ψ({w}) = {result.string}']
    if args.trace:
        data['trace'] = result.lines()
        lines = result.lines()
    if Settings.get_pref('checked'):
        string_oracle(w)
        data['oracle'] = True
        lines.append('oracle: Ψ X ≅ V(ψω)')
    return render(data, '\n'.join(lines), config)


SUITES = dict(
    complexes=verify_complexes,
    repetitive=verify_repetitive,
    happel=verify_section5,
    ar=verify_section6,
)


def cmd_verify(q, args, config):
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    data = {}
    for name in names:
        data[name] = dict(SUITES[name](q))
    lines = []
    for name, counts in data.items():
        lines.append(f'{name}:')
        lines += [f'    {k}: {v}' for k, v in counts.items()]
    return render(dict(quiver=q.name, suites=data), '\n'.join(lines), config)


def cmd_ar(q, args, config):
    w = _walk(q, args)
    if args.band:
        if not args.jordan:
            raise WalkError('a band triangle needs --jordan n,λ')
        triangle = ar_triangle_band(args.m, w, parse_jordan(args.jordan))
    else:
        triangle = ar_triangle_string(args.m, w)
    return render(triangle.to_json(), str(triangle), config)


def cmd_component(q, args, config):
    w = _walk(q, args)
    if args.band:
        if not args.jordan:
            raise WalkError('a band seed needs --jordan n,λ')
        n, lam = parse_jordan(args.jordan).jordan_form()
        seed = BandObject(args.m, w, n, lam)
    else:
        seed = StringObject(args.m, w)
    graph = ar_component(seed, args.steps)
    return emit_component(graph, 'json' if config.format == 'json' else 'dot')


def cmd_repetitive(q, args, config):
    window = parse_window(args.window) if args.window else None
    rq = repetitive_quiver(q, window)
    if config.format == 'json':
        return json.dumps(rq.to_json(), indent=2, ensure_ascii=False) + '\n'
    if config.format == 'dot':
        return rq.to_dot()
    lines = [f'{rq.name} window {list(rq.window)}']
    lines += [f'{b} : {rq.source(b)} -> {rq.target(b)}' for b in rq.arrows]
    return '\n'.join(lines) + '\n'


def selftest(q, config):
    """Run every suite in order; returns *(passed, report)*."""
    report = dict(quiver=q.name, field=str(Settings.field()), suites={})
    suites = [
        ('gentle', lambda: _gentle_suite(q)),
        ('string functions', lambda: _string_function_suite(q)),
    ] + [(name, lambda f=f: dict(f(q))) for name, f in SUITES.items()]
    for name, run in suites:
        narrate(f'running {name}')
        try:
            report['suites'][name] = run()
        except GentleError as e:
            report['suites'][name] = dict(failure=str(e))
            report['status'] = 'fail'
            error(str(e), culprit=(q.name, name))
            return False, report
    report['status'] = 'pass'
    return True, report


def _gentle_suite(q):
    report = validate_gentle(q)
    if report:
        raise IdentityFailure('not gentle', culprit=q.name, details=str(report))
    return dict(gentle=1)


def _string_function_suite(q):
    report = check_string_functions(q)
    if report:
        raise IdentityFailure('string functions fail', culprit=q.name, details=str(report))
    if not sign_table(q).is_chain():
        raise IdentityFailure('Σ tables are not chains', culprit=q.name)
    return dict(conditions=1, chains=1)


def cmd_selftest(q, args, config):
    passed, report = selftest(q, config)
    lines = [f"{q.name}: {report['status']}"]
    for name, counts in report['suites'].items():
        lines.append(f'  {name}: ' + ', '.join(f'{k} {v}' for k, v in counts.items()))
    return render(report, '\n'.join(lines), config)


# parser {{{1
def _add_walk(parser, band=True, jordan=True):
    parser.add_argument('--m', type=int, default=0, help='shift of the complex')
    parser.add_argument('--walk', help='homotopy string, e.g. "b a-"')
    if band:
        parser.add_argument('--band', help='homotopy band')
    if jordan:
        parser.add_argument('--jordan', help='Jordan block n,λ of the band parameter')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--quiver', default='Q1', help='bundled quiver name or quiver file (default: Q1)')
    common.add_argument('--field', help='F<p> for a prime p or Q (default: F5)')
    common.add_argument('--checked', action='store_true', help='run the certificates as well')
    common.add_argument('--format', choices=('text', 'json', 'dot'), default='text')
    common.add_argument('--max-len', type=int, help='longest walk enumerated (default: 6)')
    common.add_argument('--margin', type=int, help='extra layers of the repetitive window')
    common.add_argument('--verbose', '-v', action='store_true', help='narrate progress')
    common.add_argument('--output', '-o', help='write the result to this file')

    parser = argparse.ArgumentParser(
        prog='gentlear', description='Indecomposable complexes and almost split triangles of gentle algebras.',
    )
    parser.add_argument('--version', action='version', version=f'gentlear {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('validate', parents=[common], help='check the gentle conditions')
    p.set_defaults(run=cmd_validate)

    p = commands.add_parser('strings', parents=[common], help='enumerate homotopy strings')
    p.add_argument('--bands', action='store_true', help='only homotopy bands')
    p.set_defaults(run=cmd_strings)

    p = commands.add_parser('complex', parents=[common], help='build a string or band complex')
    _add_walk(p, band=False)
    p.set_defaults(run=cmd_complex, band=None)

    p = commands.add_parser('hatstring', parents=[common], help='a string of the repetitive quiver')
    p.add_argument('--walk', required=True, help='hat string, e.g. "a*[-1]- a[0]"')
    p.set_defaults(run=cmd_hatstring)

    p = commands.add_parser('psi', parents=[common], help='the image under the Happel embedding')
    _add_walk(p)
    p.add_argument('--trace', action='store_true', help='show every step of the recursion')
    p.set_defaults(run=cmd_psi)

    p = commands.add_parser('verify', parents=[common], help='run an identity suite')
    p.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    p.set_defaults(run=cmd_verify)

    p = commands.add_parser('ar', parents=[common], help='the almost split triangle starting at an object')
    _add_walk(p)
    p.set_defaults(run=cmd_ar)

    p = commands.add_parser('component', parents=[common], help='explore an Auslander–Reiten component')
    _add_walk(p)
    p.add_argument('--steps', type=int, default=3)
    p.set_defaults(run=cmd_component)

    p = commands.add_parser('repetitive', parents=[common], help='the windowed repetitive quiver')
    p.add_argument('--window', help='layers m0:m1')
    p.set_defaults(run=cmd_repetitive)

    p = commands.add_parser('selftest', parents=[common], help='run every suite')
    p.set_defaults(run=cmd_selftest)
    return parser


# main {{{1
def main(argv=None):
    args = build_parser().parse_args(argv)
    Inform(prog_name='gentlear', narrate=args.verbose)
    try:
        config = run_config(args)
        with Settings.prefs(**preferences(config)):
            Settings.field()
            q = load_quiver(config.quiver)
            if args.command != 'validate':
                require_gentle(q)
            output = args.run(q, args, config)
        if args.output:
            Path(args.output).write_text(output, encoding='utf8')
            narrate(f'wrote {args.output}')
        else:
            display(output, end='')
    except GentleError as e:
        error(str(e))
    except OSError as e:
        error(os_error(e))
    terminate_if_errors()
    done()


if __name__ == '__main__':
    main()
