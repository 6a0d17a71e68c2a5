"""Exact arithmetic in the Grothendieck ring of (G,r)-sets.

A (G,r)-set is a finite-group set whose points carry a weight vector in
Z^r_{>=0} and a one-dimensional character of their isotropy group.  The
package evaluates equivariant Poincare series as products of factors
``(1 - T)^(-chi)`` over the strata of a user-described resolution, and
projects them to ordinary and character-valued power series.
"""

from .errors import *  # noqa: F401,F403
from .group import (
    Character,
    Group,
    Subgroup,
    build_group,
    conjugate_character,
    conjugate_subgroup,
    double_cosets,
    make_character,
    make_subgroup,
    multiply_characters,
    named_group,
    normalizer,
    one_dim_characters,
    restrict_character,
    subgroup_closure,
    trivial_character,
)
from .homomorphisms import EquivariantSeries, MultiIndexSeries, project_pi, project_pi_prime
from .orbit import (
    Orbit,
    canonicalize,
    exceeds_bound,
    fixed_point,
    is_positively_weighted,
    make_orbit,
    orbit_product,
    unit_orbit,
)
from .resolution import (
    ResolutionSpec,
    StratumSpec,
    curve_example_specs,
    poincare_series,
    spec_from_json,
    spec_to_json,
    validate_spec,
)
from .ring import (
    RingElement,
    add,
    equals,
    from_orbit,
    geometric_inverse_power,
    mul,
    neg,
    one,
    power,
    zero,
)

__version__ = "0.1.0"
