"""Exact cellular homology of maximal compact subgroups of split real forms.

The cells of K are indexed by the lifted Weyl group U = M*; cells of the
maximal flag manifold by the Weyl group W.  Boundaries are computed from
the combinatorial cover rule and the homology by Smith normal form.
"""
from .chain import CellComplex, build_complex, render_boundary, sigma
from .errors import (
    BoundarySquareError,
    CellhomError,
    ComplexNotValidated,
    ElementParseError,
    InvalidLieType,
)
from .kernels import BACKEND
from .rootsys import LieType, RootSystem, build_root_system, parse_type
from .snf import HomologyGroup, IntMatrix, betti_mod2, homology, smith_normal_form
from .ugroup import CVector, LiftedGroup, UElement
from .weyl import WeylElement, WeylGroup, enumerate_group

SUPPORTED_TYPES = ("A1", "A2", "A3", "A4", "B2", "C2", "G2")

__version__ = "0.1.0"
