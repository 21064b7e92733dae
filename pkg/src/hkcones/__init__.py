"""Exact cone, chamber and base-locus computations for hyper-Kaehler models.

A model is a Neron-Severi lattice with its BBF form, an ample class, the
prime exceptional divisors and the wall (MBM) data.  All arithmetic is exact:
``fractions.Fraction`` for rationals and :class:`QuadScalar` for the
quadratic irrationals that appear on the boundary of the positive cone.
"""

from hkcones.chambers import (
    bz_chamber,
    destabilizing_numbers,
    mori_chamber,
    stability_chambers_rank2,
    unstable_rays_rank2,
)
from hkcones.cones import (
    Cone2D,
    Ray,
    amp_k,
    amp_k_dual,
    dual_cone_rank2,
    effective_cone_rank2,
    membership,
    movable_cone_rank2,
    nef_cone_rank2,
    positive_cone_boundary_rank2,
    positive_cone_rank2,
)
from hkcones.errors import DomainError, HKConesError
from hkcones.fixtures import builtin, builtin_names
from hkcones.lattice import CurveClass, DivisorClass, NSLattice, inertia, signature
from hkcones.model import ExceptionalClass, HKModel, WallData, load_model, validate
from hkcones.scalar import QuadScalar, parse_scalar, quad_roots
from hkcones.walk import base_loci, build_fan, is_unstable, walk_rank2
from hkcones.zariski import ZariskiDecomposition, brute_force_decompose, decompose

__version__ = "0.1.0"

__all__ = [
    "Cone2D",
    "CurveClass",
    "DivisorClass",
    "DomainError",
    "ExceptionalClass",
    "HKConesError",
    "HKModel",
    "NSLattice",
    "QuadScalar",
    "Ray",
    "WallData",
    "ZariskiDecomposition",
    "amp_k",
    "amp_k_dual",
    "base_loci",
    "brute_force_decompose",
    "build_fan",
    "builtin",
    "builtin_names",
    "bz_chamber",
    "decompose",
    "destabilizing_numbers",
    "dual_cone_rank2",
    "effective_cone_rank2",
    "inertia",
    "is_unstable",
    "load_model",
    "membership",
    "mori_chamber",
    "movable_cone_rank2",
    "nef_cone_rank2",
    "parse_scalar",
    "positive_cone_boundary_rank2",
    "positive_cone_rank2",
    "quad_roots",
    "signature",
    "stability_chambers_rank2",
    "unstable_rays_rank2",
    "validate",
    "walk_rank2",
]
