"""Validated constructors for the named Hopf algebra and CLA families.

Hopf families A, B (three generators, GK-dimension 3) and D, E, F, K
(four generators, GK-dimension 4) are built over generators X, Y of
weight 1, Z of weight 2 and W of weight 3, with X, Y primitive,
delta(Z) = X(x)Y - Y(x)X, and delta(W) a combination of the two degree-3
cocycles

    u = Z(x)X - X(x)Z + X(x)XY + XY(x)X,
    t = Y(x)Z - Z(x)Y + XY(x)Y + Y(x)XY.

CLA families: the three-dimensional a(l1, l2, alpha) and b(lambda), and
the eight four-dimensional anti-cocommutative families (tags "35a".."35h")
with kernel basis x1, x2, x3 and delta(z) = x1(x)x2 - x2(x)x1.

Normalization constraints coming from isomorphism classifications are
warnings for Hopf families (any rational parameters give a valid Hopf
algebra) and hard errors for CLA variants with restricted domains.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .cla import CLA
from .errors import InputError, ParameterError
from .exactlin import scalar
from .hopf import HopfPresentation
from .ore import OrePresentation

__all__ = [
    "FamilySpec", "make_A", "make_B", "make_D", "make_E", "make_F", "make_K",
    "make_lie", "make_cla_a", "make_cla_b", "make_cla_35",
    "list_catalog", "build", "family_parameter_names",
]


@dataclass(frozen=True)
class FamilySpec:
    """A catalog entry: family tag plus parameter assignment."""

    tag: str
    params: dict = field(default_factory=dict)
    label: str = ""

    def describe(self) -> str:
        if self.label:
            return self.label
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.tag}({inner})"


def _delta_z():
    return [(1, {"X": 1}, {"Y": 1}), (-1, {"Y": 1}, {"X": 1})]


def _cocycle_u(theta):
    return [(theta, {"Z": 1}, {"X": 1}), (-theta, {"X": 1}, {"Z": 1}),
            (theta, {"X": 1}, {"X": 1, "Y": 1}),
            (theta, {"X": 1, "Y": 1}, {"X": 1})]


def _cocycle_t(theta):
    return [(theta, {"Y": 1}, {"Z": 1}), (-theta, {"Z": 1}, {"Y": 1}),
            (theta, {"X": 1, "Y": 1}, {"Y": 1}),
            (theta, {"Y": 1}, {"X": 1, "Y": 1})]


def _gens3():
    return [("X", 1, (1, 0)), ("Y", 1, (0, 1)), ("Z", 2, (1, 1))]


def _gens4():
    return [("X", 1, (1, 0)), ("Y", 1, (0, 1)), ("Z", 2, (1, 1)),
            ("W", 3, (1, 2))]


def make_A(l1, l2, alpha) -> HopfPresentation:
    """[X,Y] = 0, [Z,X] = l1*X + alpha*Y, [Z,Y] = l2*Y."""
    l1, l2, alpha = scalar(l1), scalar(l2), scalar(alpha)
    if (l1 != l2 and alpha != 0) or (l1 == l2 and alpha not in (0, 1)):
        warnings.warn(
            "A-family parameters outside the normalized classes "
            "(alpha = 0 unless l1 = l2, then alpha in {0, 1}); the result "
            "is still a valid Hopf algebra", stacklevel=2)
    algebra = OrePresentation(_gens3(), {
        "Z,X": [(l1, {"X": 1}), (alpha, {"Y": 1})],
        "Z,Y": [(l2, {"Y": 1})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z()})


def make_B(lam) -> HopfPresentation:
    """[X,Y] = Y, [Z,X] = -Z + lam*Y, [Z,Y] = 0."""
    lam = scalar(lam)
    algebra = OrePresentation(_gens3(), {
        "Y,X": [(-1, {"Y": 1})],
        "Z,X": [(-1, {"Z": 1}), (lam, {"Y": 1})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z()})


def make_D(t1, t2, a11, a12, a21, a22, x1, x2) -> HopfPresentation:
    """Commutative-in-XYZ family: [W,X], [W,Y] in span(X,Y) and
    [W,Z] = (a11+a22) Z + x1 X + x2 Y; delta(W) = t1*u + t2*t."""
    t1, t2 = scalar(t1), scalar(t2)
    if t1 == 0 and t2 == 0:
        raise ParameterError("D family requires at least one theta nonzero")
    a11, a12, a21, a22 = (scalar(a11), scalar(a12), scalar(a21), scalar(a22))
    x1, x2 = scalar(x1), scalar(x2)
    algebra = OrePresentation(_gens4(), {
        "W,X": [(a11, {"X": 1}), (a12, {"Y": 1})],
        "W,Y": [(a21, {"X": 1}), (a22, {"Y": 1})],
        "W,Z": [(a11 + a22, {"Z": 1}), (x1, {"X": 1}), (x2, {"Y": 1})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z(),
                                      "W": _cocycle_u(t1) + _cocycle_t(t2)})


def make_E(a, b, xi) -> HopfPresentation:
    """[Z,X] = X; [W,X] = a X, [W,Y] = b X, [W,Z] = a Z - W + xi X;
    delta(W) = u."""
    a, b, xi = scalar(a), scalar(b), scalar(xi)
    algebra = OrePresentation(_gens4(), {
        "Z,X": [(1, {"X": 1})],
        "W,X": [(a, {"X": 1})],
        "W,Y": [(b, {"X": 1})],
        "W,Z": [(a, {"Z": 1}), (-1, {"W": 1}), (xi, {"X": 1})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z(), "W": _cocycle_u(1)})


def make_F(beta, gamma, xi) -> HopfPresentation:
    """[Z,X] = Y; [W,X] = beta Y, [W,Y] = gamma Y,
    [W,Z] = gamma Z - (2/3) Y^3 + xi X; delta(W) = t."""
    beta, gamma, xi = scalar(beta), scalar(gamma), scalar(xi)
    if {beta, gamma} not in ({Fraction(0), Fraction(1)},):
        warnings.warn(
            "F-family parameters outside the normalized classes "
            "({beta, gamma} = {0, 1}); the result is still a valid Hopf "
            "algebra", stacklevel=2)
    algebra = OrePresentation(_gens4(), {
        "Z,X": [(1, {"Y": 1})],
        "W,X": [(beta, {"Y": 1})],
        "W,Y": [(gamma, {"Y": 1})],
        "W,Z": [(gamma, {"Z": 1}), (Fraction(-2, 3), {"Y": 3}),
                (xi, {"X": 1})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z(), "W": _cocycle_t(1)})


def make_K() -> HopfPresentation:
    """[Z,X] = X; [W,X] = -Z, [W,Y] = 0, [W,Z] = W - X Y^2; delta(W) = t."""
    algebra = OrePresentation(_gens4(), {
        "Z,X": [(1, {"X": 1})],
        "W,X": [(-1, {"Z": 1})],
        "W,Z": [(1, {"W": 1}), (-1, {"X": 1, "Y": 2})],
    })
    return HopfPresentation(algebra, {"Z": _delta_z(), "W": _cocycle_t(1)})


def make_lie(basis, brackets) -> HopfPresentation:
    """Enveloping Hopf presentation of an ordinary Lie algebra.

    brackets: {(i, j): {k: coeff}} structure constants over the given
    basis; all generators are primitive with weight 1.  The constants must
    satisfy Jacobi (checked via the CLA machinery with delta = 0).
    """
    L = CLA(basis, brackets)
    from .cla import enveloping, verify_cla
    report = verify_cla(L)
    if not report.passed:
        raise InputError(
            f"structure constants are not a Lie algebra: "
            f"{report.failures()[0].name}")
    return enveloping(L, check=False)


def make_cla_a(l1, l2, alpha) -> CLA:
    """3-dim CLA: [x,y] = 0, [z,x] = l1 x + alpha y, [z,y] = l2 y,
    delta(z) = x(x)y - y(x)x."""
    return CLA(["x", "y", "z"],
               brackets={(2, 0): {0: scalar(l1), 1: scalar(alpha)},
                         (2, 1): {1: scalar(l2)}},
               delta={2: {(0, 1): 1, (1, 0): -1}})


def make_cla_b(lam) -> CLA:
    """3-dim CLA: [x,y] = y, [z,x] = -z + lam y, [z,y] = 0,
    delta(z) = x(x)y - y(x)x."""
    return CLA(["x", "y", "z"],
               brackets={(0, 1): {1: 1},
                         (2, 0): {2: -1, 1: scalar(lam)}},
               delta={2: {(0, 1): 1, (1, 0): -1}})


_AB_CHOICES = {(Fraction(1), Fraction(1)), (Fraction(1), Fraction(0)),
               (Fraction(0), Fraction(1)), (Fraction(0), Fraction(0))}


def make_cla_35(variant: str, **params) -> CLA:
    """The eight families of 4-dim anti-cocommutative CLAs, tags "a".."h".

    Basis x1, x2, x3, z with delta(z) = x1(x)x2 - x2(x)x1 and delta = 0 on
    the x_i; parameter domains are enforced as documented per variant.

    The tables are built verbatim.  Beware that variant "g" with b or c
    nonzero and variant "h" with a = 1 do not satisfy the Jacobi identity
    (apply [z, -] to [x3, x1]: the two sides differ by 2a, resp. 2b or 2c);
    verify_cla reports this honestly.  The Jacobi-consistent members are
    g with b = c = 0 and h with a = 0.
    """
    variant = variant.lower().removeprefix("35")
    names = ["x1", "x2", "x3", "z"]
    delta = {3: {(0, 1): Fraction(1), (1, 0): Fraction(-1)}}

    def need(*keys):
        missing = [k for k in keys if k not in params]
        extra = [k for k in params if k not in keys]
        if missing or extra:
            raise ParameterError(
                f"variant {variant!r} takes parameters {list(keys)}; "
                f"missing {missing}, unexpected {extra}")
        return [scalar(params[k]) for k in keys]

    def ab_domain(a, b):
        if (a, b) not in _AB_CHOICES:
            raise ParameterError(
                f"(a, b) must be one of (1,1), (1,0), (0,1), (0,0); got "
                f"({a}, {b})")

    if variant == "a":
        a, b, c = need("a", "b", "c")
        ab_domain(a, b)
        brackets = {(1, 0): {1: 1},
                    (3, 0): {3: 1, 0: a, 1: c},
                    (3, 1): {1: a},
                    (3, 2): {1: b}}
    elif variant == "b":
        (a11, a12, a13, a21, a22, a23, a31, a32, a33) = need(
            "a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33")
        brackets = {(3, 0): {0: a11, 1: a12, 2: a13},
                    (3, 1): {0: a21, 1: a22, 2: a23},
                    (3, 2): {0: a31, 1: a32, 2: a33}}
    elif variant == "c":
        a, b, c = need("a", "b", "c")
        brackets = {(2, 0): {1: 1},
                    (3, 0): {0: a, 2: b},
                    (3, 1): {1: 1},
                    (3, 2): {0: c, 2: 1 - a}}
    elif variant == "d":
        a, b, c = need("a", "b", "c")
        brackets = {(2, 0): {1: 1},
                    (3, 0): {0: a, 2: b},
                    (3, 2): {0: c, 2: -a}}
    elif variant == "e":
        a, b, c = need("a", "b", "c")
        ab_domain(a, b)
        brackets = {(2, 0): {0: 1},
                    (3, 0): {0: a},
                    (3, 1): {0: b},
                    (3, 2): {3: -1, 0: c, 2: a}}
    elif variant == "f":
        need()
        brackets = {(2, 0): {0: 1, 1: 1},
                    (2, 1): {1: 1},
                    (3, 2): {3: -2}}
    elif variant == "g":
        a, b, c = need("a", "b", "c")
        ab_domain(a, b)
        brackets = {(2, 0): {0: 1},
                    (2, 1): {1: -1},
                    (3, 0): {0: a, 1: c},
                    (3, 1): {0: b}}
    elif variant == "h":
        lam, a = need("lam", "a")
        if lam in (0, -1):
            raise ParameterError("variant h requires lam outside {0, -1}")
        if a not in (0, 1):
            raise ParameterError("variant h requires a in {0, 1}")
        brackets = {(2, 0): {0: 1},
                    (2, 1): {1: lam},
                    (3, 0): {1: a},
                    (3, 1): {0: a},
                    (3, 2): {3: -1 - lam}}
    else:
        raise ParameterError(f"unknown 4-dim CLA variant {variant!r}")
    return CLA(names, brackets, delta)


# -- ready-made Lie algebras used by the catalog ------------------------------------

_LIE_PRESETS = {
    "abelian4": (["a", "b", "c", "d"], {}),
    "heis3": (["p", "q", "e"], {(0, 1): {2: 1}}),
    "solv2": (["x", "y"], {(0, 1): {1: 1}}),
}


def make_lie_preset(name: str) -> HopfPresentation:
    if name not in _LIE_PRESETS:
        raise ParameterError(
            f"unknown Lie preset {name!r}; available: {sorted(_LIE_PRESETS)}")
    basis, brackets = _LIE_PRESETS[name]
    return make_lie(basis, brackets)


# -- dispatch ------------------------------------------------------------------------

_HOPF_PARAM_NAMES = {
    "A": ["l1", "l2", "alpha"],
    "B": ["lam"],
    "D": ["t1", "t2", "a11", "a12", "a21", "a22", "x1", "x2"],
    "E": ["a", "b", "xi"],
    "F": ["beta", "gamma", "xi"],
    "K": [],
}

_CLA35_PARAM_NAMES = {
    "a": ["a", "b", "c"],
    "b": ["a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"],
    "c": ["a", "b", "c"],
    "d": ["a", "b", "c"],
    "e": ["a", "b", "c"],
    "f": [],
    "g": ["a", "b", "c"],
    "h": ["lam", "a"],
}


def family_parameter_names(tag: str) -> list[str]:
    """Positional parameter names for a family tag (CLI --params order)."""
    tag = _normalize_tag(tag)
    if tag in _HOPF_PARAM_NAMES:
        return list(_HOPF_PARAM_NAMES[tag])
    if tag == "cla_a":
        return ["l1", "l2", "alpha"]
    if tag == "cla_b":
        return ["lam"]
    if tag.startswith("cla35"):
        return list(_CLA35_PARAM_NAMES[tag[5:]])
    if tag.startswith("lie_"):
        return []
    raise InputError(f"unknown family tag {tag!r}")


def _normalize_tag(tag: str) -> str:
    t = tag.strip()
    if t.upper() in _HOPF_PARAM_NAMES:
        return t.upper()
    t = t.lower()
    if t in ("cla_a", "cla-a", "claa"):
        return "cla_a"
    if t in ("cla_b", "cla-b", "clab"):
        return "cla_b"
    if t.startswith("cla-35"):
        t = "cla35" + t[6:]
    if t.startswith("cla35") and t[5:] in _CLA35_PARAM_NAMES:
        return t
    if t.startswith("lie_") and t[4:] in _LIE_PRESETS:
        return t
    raise InputError(f"unknown family tag {tag!r}")


def build(spec: FamilySpec):
    """Construct the Hopf presentation or CLA described by a FamilySpec."""
    tag = _normalize_tag(spec.tag)
    names = family_parameter_names(tag)
    missing = [n for n in names if n not in spec.params]
    if missing:
        raise InputError(f"family {tag} needs parameters {names}; "
                         f"missing {missing}")
    args = [spec.params[n] for n in names]
    if tag == "A":
        return make_A(*args)
    if tag == "B":
        return make_B(*args)
    if tag == "D":
        return make_D(*args)
    if tag == "E":
        return make_E(*args)
    if tag == "F":
        return make_F(*args)
    if tag == "K":
        return make_K()
    if tag == "cla_a":
        return make_cla_a(*args)
    if tag == "cla_b":
        return make_cla_b(*args)
    if tag.startswith("cla35"):
        return make_cla_35(tag[5:], **dict(zip(names, args)))
    if tag.startswith("lie_"):
        return make_lie_preset(tag[4:])
    raise InputError(f"unknown family tag {spec.tag!r}")


def from_cli_params(tag: str, params: list) -> FamilySpec:
    """FamilySpec from a CLI-style positional parameter list."""
    tag = _normalize_tag(tag)
    names = family_parameter_names(tag)
    if len(params) != len(names):
        raise InputError(
            f"family {tag} takes {len(names)} parameter(s) "
            f"({', '.join(names) or 'none'}); got {len(params)}")
    return FamilySpec(tag, dict(zip(names, [scalar(p) for p in params])))


def list_catalog() -> list[FamilySpec]:
    """One representative per family, at the documented normalized parameters."""
    f = Fraction
    entries = [
        FamilySpec("A", {"l1": f(0), "l2": f(0), "alpha": f(0)}, "A(0,0,0)"),
        FamilySpec("A", {"l1": f(1), "l2": f(0), "alpha": f(0)}, "A(1,0,0)"),
        FamilySpec("A", {"l1": f(0), "l2": f(0), "alpha": f(1)}, "A(0,0,1)"),
        FamilySpec("A", {"l1": f(1), "l2": f(1), "alpha": f(1)}, "A(1,1,1)"),
        FamilySpec("A", {"l1": f(1), "l2": f(2), "alpha": f(0)}, "A(1,2,0)"),
        FamilySpec("B", {"lam": f(0)}, "B(0)"),
        FamilySpec("B", {"lam": f(1)}, "B(1)"),
        FamilySpec("D", {"t1": f(0), "t2": f(1), "a11": f(0), "a12": f(0),
                         "a21": f(0), "a22": f(0), "x1": f(0), "x2": f(0)},
                   "D({0,1},{0},{0})"),
        FamilySpec("D", {"t1": f(1), "t2": f(0), "a11": f(1), "a12": f(0),
                         "a21": f(0), "a22": f(1), "x1": f(1), "x2": f(0)},
                   "D({1,0},{1,0,0,1},{1,0})"),
        FamilySpec("E", {"a": f(0), "b": f(0), "xi": f(0)}, "E(0,0,0)"),
        FamilySpec("E", {"a": f(1), "b": f(1), "xi": f(0)}, "E(1,1,0)"),
        FamilySpec("E", {"a": f(0), "b": f(1), "xi": f(2)}, "E(0,1,2)"),
        FamilySpec("F", {"beta": f(1), "gamma": f(0), "xi": f(0)}, "F(1,0,0)"),
        FamilySpec("F", {"beta": f(0), "gamma": f(1), "xi": f(0)}, "F(0,1,0)"),
        FamilySpec("F", {"beta": f(0), "gamma": f(1), "xi": f(5)}, "F(0,1,5)"),
        FamilySpec("K", {}, "K"),
        FamilySpec("lie_abelian4", {}, "U(abelian, dim 4)"),
        FamilySpec("lie_heis3", {}, "U(Heisenberg, dim 3)"),
        FamilySpec("lie_solv2", {}, "U(solvable, dim 2)"),
        FamilySpec("cla_a", {"l1": f(0), "l2": f(0), "alpha": f(0)}, "a(0,0,0)"),
        FamilySpec("cla_a", {"l1": f(1), "l2": f(2), "alpha": f(0)}, "a(1,2,0)"),
        FamilySpec("cla_a", {"l1": f(0), "l2": f(0), "alpha": f(1)}, "a(0,0,1)"),
        FamilySpec("cla_a", {"l1": f(1), "l2": f(1), "alpha": f(1)}, "a(1,1,1)"),
        FamilySpec("cla_b", {"lam": f(0)}, "b(0)"),
        FamilySpec("cla_b", {"lam": f(1)}, "b(1)"),
        FamilySpec("cla35a", {"a": f(1), "b": f(1), "c": f(0)},
                   "dim-4 CLA, variant a, (1,1,0)"),
        FamilySpec("cla35b", {k: f(0) for k in _CLA35_PARAM_NAMES["b"]},
                   "dim-4 CLA, variant b, zero matrix"),
        FamilySpec("cla35b", {"a11": f(1), "a12": f(0), "a13": f(0),
                              "a21": f(0), "a22": f(2), "a23": f(0),
                              "a31": f(0), "a32": f(0), "a33": f(3)},
                   "dim-4 CLA, variant b, diag(1,2,3)"),
        FamilySpec("cla35c", {"a": f(1), "b": f(1), "c": f(1)},
                   "dim-4 CLA, variant c, (1,1,1)"),
        FamilySpec("cla35d", {"a": f(1), "b": f(0), "c": f(0)},
                   "dim-4 CLA, variant d, (1,0,0)"),
        FamilySpec("cla35e", {"a": f(1), "b": f(1), "c": f(0)},
                   "dim-4 CLA, variant e, (1,1,0)"),
        FamilySpec("cla35f", {}, "dim-4 CLA, variant f"),
        # the printed variant-g table with b or c nonzero, and the printed
        # variant-h table with a = 1, fail the Jacobi identity (see
        # make_cla_35); the catalog carries the Jacobi-consistent parameters
        FamilySpec("cla35g", {"a": f(1), "b": f(0), "c": f(0)},
                   "dim-4 CLA, variant g, (1,0,0)"),
        FamilySpec("cla35h", {"lam": f(2), "a": f(0)},
                   "dim-4 CLA, variant h, (2,0)"),
    ]
    return entries
