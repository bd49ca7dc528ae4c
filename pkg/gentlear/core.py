# encoding: utf8

# Description {{{1
"""
Exceptions, preferences and version information shared by every module of
*gentlear*.

Preferences are held by :class:`Settings`.  They follow a simple protocol:
:meth:`Settings.set_prefs` changes them, :meth:`Settings.get_pref` reads them,
and :meth:`Settings.prefs` changes them temporarily within a *with*
statement::

    >>> from gentlear import Settings
    >>> with Settings.prefs(field='F7', checked=True):
    ...     print(Settings.get_pref('field'), Settings.get_pref('checked'))
    F7 True
    >>> print(Settings.get_pref('field'), Settings.get_pref('checked'))
    F5 False

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
from collections import ChainMap


# Globals {{{1
__version__ = '0.4'
__released__ = '2026-10-19'


# Exceptions {{{1
# GentleError {{{2
class GentleError(Exception):
    """gentlear base exception.

    All of the specific gentlear exceptions subclass this exception.
    Positional and keyword arguments are retained in *args* and *kwargs* and
    are interpolated into the message by :meth:`render`.
    """
    _template = "{}"

    def __init__(self, *args, **kwargs):
        self.args = args
        self.kwargs = kwargs

    def render(self, template=None):
        """Convert exception to a string under guidance of format string.

        :arg str template:
            This string, along with the positional and keyword arguments of
            the exception are passed to the Python format() function and the
            result is returned. *template* may also be a list of strings. In
            this case the first string found that renders without error is used.
            If *template* is not given, the exception is rendered with the
            built-in template.
        """
        templates = [template or self._template]
        if not isinstance(templates[0], str):
            templates = list(templates[0])
        for t in templates:
            try:
                msg = t.format(*self.args, **self.kwargs)
                if msg == t and self.args:
                    break
                return msg
            except (IndexError, KeyError):
                continue
        else:
            raise ValueError("No valid template found.")
        culprits = ', '.join(str(a) for a in self.args)
        return '{}: {}'.format(culprits, t)

    def __str__(self):
        return self.render()

    def __repr__(self):
        name = self.__class__.__name__
        kwargs = ['{!s}={!r}'.format(k, v) for k, v in self.kwargs.items()]
        args = [repr(a) for a in list(self.args)]
        return '{}({})'.format(name, ', '.join(a for a in args + kwargs))


# QuiverSyntaxError {{{2
class QuiverSyntaxError(GentleError, ValueError):
    """
    The quiver description could not be parsed.  The *line* and *col* keyword
    arguments locate the offending text (both count from 1).
    """
    _template = "line {line}, col {col}: {}"


# QuiverError {{{2
class QuiverError(GentleError, ValueError):
    """
    The quiver description parsed but is structurally invalid: duplicate
    names, dangling arrow endpoints, unknown arrows in relations, or relation
    pairs that do not compose.
    """
    _template = ["{culprit}: {}.", "{}."]


# NotGentle {{{2
class NotGentle(GentleError, ValueError):
    """
    An operation that requires a gentle bound quiver was given one that is not.
    The *report* keyword carries the list of violations.
    """
    _template = "quiver is not gentle: {report}."


# UnsatisfiableSigns {{{2
class UnsatisfiableSigns(GentleError, ValueError):
    """
    No string functions satisfy the constraints of the quiver.
    """
    _template = "{}: string functions cannot be assigned."


# WalkError {{{2
class WalkError(GentleError, ValueError):
    """
    A walk is ill formed or a walk literal could not be read.
    """
    _template = ["{culprit}: {}.", "{}."]


# IndexOutOfRange {{{2
class IndexOutOfRange(GentleError, IndexError):
    """
    An index into a walk or its directed decomposition lies outside the
    allowed range.
    """
    _template = "{}: index out of range, expected 0 ≤ i ≤ {bound}."


# NotABand {{{2
class NotABand(GentleError, ValueError):
    """
    A band was required but the given walk is not one.
    """
    _template = "{}: not a band."


# UndefinedComposition {{{2
class UndefinedComposition(GentleError, ValueError):
    """
    A formula requires a composition that turns out to be undefined.
    """
    _template = ["{} · {}: composition is undefined in {context}.",
                 "{} · {}: composition is undefined."]


# WindowExhausted {{{2
class WindowExhausted(GentleError, IndexError):
    """
    An operation on the repetitive quiver needs layers outside of the current
    window.  The *needed* keyword gives the layer that was requested.
    """
    _template = "layer {needed} lies outside window {window}."


# SingularMatrix {{{2
class SingularMatrix(GentleError, ArithmeticError):
    """
    A matrix that must be invertible is singular.
    """
    _template = ["{culprit}: matrix is singular.", "matrix is singular."]


# NotIndecomposable {{{2
class NotIndecomposable(GentleError, ValueError):
    """
    An automorphism is not a single Jordan block over the configured field.
    """
    _template = ["{culprit}: {}.", "automorphism is not indecomposable."]


# FieldError {{{2
class FieldError(GentleError, ValueError):
    """
    The requested coefficient field is not supported.
    """
    _template = "{}: unknown field, expected Q or F<p> with p prime."


# IdentityFailure {{{2
class IdentityFailure(GentleError, AssertionError):
    """
    An identity that is expected to hold failed.  The *culprit* keyword
    names the object that exposed the failure and *details* gives the
    transcript.
    """
    _template = ["{culprit}: {}: {details}", "{culprit}: {}", "{}"]


# UnknownPreference {{{2
class UnknownPreference(GentleError, KeyError):
    """
    The name given for a preference is unknown.
    """
    _template = "{}: unknown preference."


# Preferences {{{1
DEFAULTS = dict(
    field = 'F5',
    max_len = 6,
    margin = 2,
    checked = False,
    exhaustive_limit = 625,
    seed = 0,
    max_attempts = 200,
    widen_limit = 8,
)


# Settings class {{{1
class Settings:
    """Holder of the gentlear preferences.

    The preferences are class attributes, there is never a need to
    instantiate this class.
    """

    _initialized = False

    # initialize preferences {{{2
    @classmethod
    def _initialize_preferences(cls):
        if cls._initialized == id(cls):
            return
        cls.reset_prefs()

    # reset preferences {{{2
    @classmethod
    def reset_prefs(cls):
        """Reset preferences to their defaults."""
        cls._initialized = id(cls)
        cls._preferences = ChainMap({}, dict(DEFAULTS))
            # keep an empty map in front so the defaults are never modified

    # set preferences {{{2
    @classmethod
    def set_prefs(cls, **kwargs):
        """Set preferences.

        Any values not passed in are left alone.
        Pass in *None* to reset a preference to its default value.

        :arg str field:
            The coefficient field, either ``'Q'`` for the rationals or
            ``'F<p>'`` for the prime field with *p* elements.
            Default is ``'F5'``.

        :arg int max_len:
            The largest walk length considered by enumerations and suites.
            Default is 6.

        :arg int margin:
            Extra layers added to the automatically sized window of the
            repetitive quiver. Default is 2.

        :arg bool checked:
            Run the hat-layer certificates inside the Auslander–Reiten
            operations. Default is False.

        :arg int exhaustive_limit:
            Largest Hom space (counted in elements) searched exhaustively for
            an invertible element. Larger spaces are sampled at random.
            Default is 625.

        :arg int seed:
            Seed for the random search. Default is 0.

        :arg int max_attempts:
            Number of random samples drawn before giving up. Default is 200.

        :arg int widen_limit:
            Number of times a window is widened before an operation gives up.
            Default is 8.

        :raises UnknownPreference(GentleError, KeyError):
            Unknown preference.
        """
        cls._initialize_preferences()
        for k, v in kwargs.items():
            if k not in DEFAULTS:
                raise UnknownPreference(k)
            if v is None:
                try:
                    del cls._preferences[k]
                except KeyError:
                    cls._preferences[k] = DEFAULTS[k]
            else:
                cls._preferences[k] = v

    # get preference {{{2
    @classmethod
    def get_pref(cls, name):
        """Get preference.

        :arg str name:
            Name of the desired preference. See :meth:`Settings.set_prefs()`
            for list of preferences.

        :raises UnknownPreference(GentleError, KeyError):
            unknown preference.
        """
        cls._initialize_preferences()
        try:
            return cls._preferences[name]
        except KeyError:
            raise UnknownPreference(name)

    # preferences {{{2
    class _ContextManager:
        def __init__(self, cls, kwargs):
            self.cls = cls
            self.kwargs = kwargs

        def __enter__(self):
            cls = self.cls
            cls._initialize_preferences()
            cls._preferences = cls._preferences.new_child()
            cls.set_prefs(**self.kwargs)

        def __exit__(self, *args):
            self.cls._preferences = self.cls._preferences.parents

    @classmethod
    def prefs(cls, **kwargs):
        """Set preferences temporarily.

        This is just like :meth:`Settings.set_prefs()`, except it is designed
        to be used as a context manager. The preferences are restored upon
        exiting the *with* statement.

        :raises UnknownPreference(GentleError, KeyError):
            Unknown preference.
        """
        return cls._ContextManager(cls, kwargs)

    # field {{{2
    @classmethod
    def field(cls):
        """Return the configured coefficient field.

        :raises FieldError(GentleError, ValueError):
            the *field* preference names an unsupported field.
        """
        from .linalg import make_field
        return make_field(cls.get_pref('field'))
