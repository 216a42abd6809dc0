"""B-free Toeplitz sequences: exact generation, skeleton blocks and holes,
the finite-depth odometer factor, and exhaustive sliding-block endomorphism
search with hole-alignment certificates."""

from .arithmetic import (
    DensityReport,
    Progression,
    count_in_interval,
    intersect_progressions,
    multiples_density,
    solve_congruence,
)
from .automorphism import (
    ComplementMembershipReport,
    LiftCertificate,
    SearchReport,
    SlidingCode,
    Survivor,
    alignment_certificate,
    complement_membership,
    divisibility_check,
    endomorphism_search,
    hole_stabilizer,
    is_shift_power,
    language,
)
from .bfree import (
    BFreeFamily,
    PeriodCertificate,
    SymbolWindow,
    TautReport,
    depth_for_window,
    eta_at,
    eta_window,
    family_for_window,
    make_family,
    period_certificate,
    taut_check_truncated,
)
from .counterexample import (
    ComplementClosedConstruction,
    build_blocks,
    complement_closure_check,
    detect_period,
    make_construction,
    window_of,
)
from .errors import (
    BFreeError,
    ComplexityRefusalError,
    DepthInsufficientError,
    DepthMismatchError,
    FamilyError,
    InconsistentLevelsError,
    NotCoprimeError,
    NotGreaterThanOneError,
    NotOddError,
    WindowTooShortError,
)
from .odometer import (
    DepthClassification,
    OdometerElement,
    add,
    classify_at_depth,
    from_integer,
    metric,
    point_of,
    shifted_skeleton,
    translate,
)
from .toeplitz import (
    EssentialPeriodReport,
    PeriodicStructureReport,
    SkeletonBlock,
    cyclic_min_gap,
    essential_check,
    per_set_brute,
    periodic_structure_report,
    regularity_ratio,
    residue_classes_of_holes,
    sh_gap,
    skeleton_exact,
)

__version__ = "0.1.0"
