"""Toric reduction of polynomial logarithmic p-forms.

Newton polyhedra, dual fans, regular refinements by stellar subdivision,
chart-wise pull-backs and certified non-degeneracy checks.
"""

from .degeneracy import SearchConfig, Status, log_smooth_check, nnd_check
from .errors import FormSyntaxError, InputError, TheoremViolation
from .fan import Cone, Fan, is_refinement, regularize, triangulate
from .forms import LogPForm, StandardPForm, to_logarithmic, to_standard
from .newton import NewtonPolyhedron
from .parser import format_document, load_form, parse_form
from .pipeline import theorem_pipeline
from .polynomial import Polynomial
from .pullback import chart_matrix, check_adapted, pull_back

__version__ = "0.1.0"
