from .core import (

    GentleError,            # exceptions
    QuiverSyntaxError,
    QuiverError,
    NotGentle,
    UnsatisfiableSigns,
    WalkError,
    IndexOutOfRange,
    NotABand,
    UndefinedComposition,
    WindowExhausted,
    SingularMatrix,
    NotIndecomposable,
    FieldError,
    IdentityFailure,
    UnknownPreference,

    Settings,               # preferences

    __version__,            # version
    __released__,
)

from .linalg import (
    make_field,             # fields
)

from .quiver import (
    BoundQuiver,            # quivers
    Path,
    GentleReport,
    parse_quiver,
    bundled,
    validate_gentle,
    require_gentle,
    check_almost_gentle,
    is_almost_gentle,
    compute_string_functions,
    check_string_functions,
)

from .strings import (
    Letter,                 # walks and strings
    Walk,
    parse_walk,
    is_string,
    is_band,
    string_compose,
    substring_t,
    substring_s,
    simple_strings_from,
    simple_strings_into,
    alpha,
    sigma,
    sign_table,
)

from .homotopy import (
    HomotopyString,         # homotopy strings
    parse_homotopy_string,
    is_homotopy_string,
    is_homotopy_band,
    hstring_compose,
    hcompose,
    sigma_omega,
    antipaths,
    theta_max,
    is_antipath,
    canonical_band,
    enumerate_homotopy_strings,
    enumerate_homotopy_bands,
)

from .complexes import (
    PathMatrix,             # complexes of projectives
    ProjComplex,
    ChainMap,
    Automorphism,
    jordan,
    string_complex,
    band_complex,
    stalk,
    upsilon,
    shift,
    mapping_cone,
    complexes_isomorphic,
    verify_complexes,
)

from .repetitive import (
    RepQuiver,              # the repetitive quiver
    HatString,
    repetitive_quiver,
    build_repetitive,
    parse_hat_string,
    lift,
    xi_star,
    times,
    plus,
    Delta,
    Delta_inverse,
    Delta_power,
    hat_plus_left,
    hat_plus_right,
    hat_plus_both,
    enumerate_hat_strings,
)

from .modules import (
    HatRep,                 # representations
    RepMap,
    hom_space,
    is_isomorphic,
    is_indecomposable,
    projective,
    syzygy,
    cosyzygy,
    string_module,
    band_module,
    hat_ar_sequence,
    certify_ar_sequence,
    verify_repetitive,
)

from .happel import (
    psi,                    # the Happel embedding
    psi_trace,
    psi_prime,
    psi_band,
    happel_oracle,
    string_oracle,
    band_oracle,
    verify_section5,
)

from .ar import (
    StringObject,           # almost split triangles
    BandObject,
    ARTriangle,
    BoundaryClass,
    r_of,
    omega_prime,
    plus_left,
    plus_right,
    plus_both,
    ar_triangle_string,
    ar_triangle_band,
    certify_jordan_sequence,
    classify_boundary,
    ar_component,
    emit_component,
    verify_section6,
)
