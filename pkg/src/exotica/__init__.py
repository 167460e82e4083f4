"""exotica: a symbolic verification toolkit for cut-and-paste constructions
of exotic smooth 4-manifolds.

Free-group and presentation algebra with certified Todd-Coxeter coset
enumeration; surface homology with Dehn-twist transvections; characteristic
number calculus under blowup, connected sum and generalized fiber sum;
Freedman-type classification; a rule-based exoticness deduction engine; and a
small script language that replays whole constructions with machine-checked
assertions.
"""

from .coset import (
    DEFAULT_BUDGET,
    CosetTable,
    TrivialityResult,
    coset_enumerate,
    group_order,
    is_trivial,
)
from .constructions import (
    KnotRecord,
    bundled,
    bundled_names,
    cross_circle,
    knot,
    trefoil_torus_presentation,
    zero_surgery,
)
from .deduction import ContradictionError, DeductionReport, DeductionStep, Fact, deduce
from .fourmanifolds import (
    FiberSumDescription,
    Flag,
    IntersectionLattice,
    InvariantRecord,
    Minimality,
    Parity,
    adjunction_genus,
    blow_up,
    connected_sum,
    fiber_sum,
    freedman_type,
    hyperbolic_blowup_lattice,
    pairing,
    projective_blowup_lattice,
    record,
    standard,
    usher_minimality,
)
from .presentations import (
    AbelianGroupDescription,
    BoundaryData,
    GluingMap,
    Presentation,
    abelianize,
    glue_fiber_sum,
    longitude_is_nullhomologous,
    matching_from_gluing,
    quotient,
    tietze_eliminate,
    van_kampen_fiber_sum,
)
from .snf import SmithForm, determinantal_divisor, in_row_space, smith_normal_form
from .surfaces import (
    SurfaceHomology,
    class_of_word,
    compose,
    lefschetz_pi1,
    preserves_pairing,
    surface_group,
    surface_relator,
    transvection,
)
from .textform import (
    format_boundary,
    format_gluing,
    format_presentation,
    format_word,
    parse_boundary,
    parse_gluing,
    parse_presentation,
    parse_word,
)
from .words import Word, commutator, reduce, relation

__version__ = "0.1.0"
