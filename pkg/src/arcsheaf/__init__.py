"""Arc model for coherent sheaves on a weighted projective line of type (p, q).

Curves on a marked annulus stand in for indecomposable sheaves; crossing
counts compute Ext spaces, triangulations are tilting sheaves, flips are
mutations, and the mapping class group acts by twists and the swap.
"""

from .errors import InputError
from .lgroup import LElement, Weight, c, dim_S, leq, normalize, omega, x1, x2, zero
from .model import (
    ARSequence,
    Bridging,
    Curve,
    Line,
    Loop,
    Ordinary,
    PeriLower,
    PeriUpper,
    POINT_INF,
    POINT_ZERO,
    Sheaf,
    Torsion,
    ar_sequence,
    indecomposables_in_window,
    is_arc,
    is_exceptional,
    move_end,
    move_start,
    phi,
    phi_inv,
    tau_curve,
    tau_curve_inv,
    tau_sheaf,
    tau_sheaf_inv,
    twist,
)
from .homext import (
    dim_ext1,
    dim_hom,
    ext1_line_line_table,
    ext1_torsion_line_divisibility,
    sheaf_degree,
    sheaf_rank,
)
from .intersect import compatible, pos_int, resolve_crossing
from .tilting import (
    LambdaVertex,
    TiltingBundleNF,
    Triangulation,
    bundle_nf,
    complements,
    fan_tilting,
    flip,
    flip_slot,
    flippable_count,
    iota,
    lambda_step,
    random_triangulation,
    random_vertex,
    reduce_to_fan,
    tilting_to_vertex,
    validate_tilting,
    vertex_to_tilting,
)
from .graphs import (
    Graph,
    check_relations,
    exchange_graph,
    graph_dot,
    graph_json,
    lambda_graph,
    verify_lambda_iso,
)
from .symmetry import (
    LETTERS,
    act_curve,
    act_sheaf,
    act_triangulation,
    parse_word,
    rho,
    rho1,
    rho2,
    sigma_lambda,
)
from .perp import Annulus, CutComponent, Disk, component_json, perpendicular
from .jsonio import (
    canonical_dumps,
    decode_any,
    decode_arc,
    decode_lelement,
    decode_sheaf,
    decode_triangulation,
    decode_vertex,
    decode_weight,
    encode_arc,
    encode_lelement,
    encode_sheaf,
    encode_triangulation,
    encode_vertex,
    flip_report,
    sheaf_labels,
    triangulation_report,
)

__version__ = "0.1.0"
