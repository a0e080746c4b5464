"""Exact cross-ratio expander functions, their energies, and the projective
point/plane picture of the transformations behind them."""
from .exact import INF, make_rational
from .expander import InputSet, ValueSet, image, image_f, image_g, image_h, naive_image
from .kernels import HAVE_COMPILED
from .projective import IDENTITY, Mobius, apply, compose, cross_ratio, inverse, quadruple_related, solve_triple

__all__ = [
    "INF",
    "make_rational",
    "InputSet",
    "ValueSet",
    "image",
    "image_f",
    "image_g",
    "image_h",
    "naive_image",
    "HAVE_COMPILED",
    "IDENTITY",
    "Mobius",
    "apply",
    "compose",
    "cross_ratio",
    "inverse",
    "quadruple_related",
    "solve_triple",
]
