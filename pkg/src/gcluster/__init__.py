"""Generalized cluster complexes of finite root systems.

Two independent constructions of the complex on colored almost positive
roots: a colored reflection recursion, and the Ext-degree of indecomposables
in the d-cluster category of a Dynkin quiver.
"""
from .cartan import (
    CartanData,
    RootSystem,
    cartan_matrix,
    classify,
    coxeter_invariants,
    format_root,
    parse_root,
    parse_type,
    positive_roots,
    root_system,
)
from .colored import (
    ColoredRoot,
    colored_roots,
    parse_colored_root,
    r_d_omega,
    r_omega,
    sigma_kd,
    t_of,
    tau_pm,
    truncated_reflection,
)
from .compat import compat_degree, is_compatible_colored, is_compatible_colored_oracle
from .complex import (
    ComplexData,
    build_complex,
    complements,
    complex_isomorphic,
    f_vector,
    fuss_catalan,
    positive_subcomplex,
)
from .errors import GCCError
from .quiver import (
    ValuedQuiver,
    admissible_ordering,
    alternating_orientation,
    linear_orientation,
    parse_orientation,
    reflect_orientation,
)
from .repcat import CdObject, ClusterCategory, DerivedObject, QuiverModel, QuiverRep

__version__ = "0.1.0"
