"""Graphs with monoid-labeled edges: morphisms, composition, feedback loops."""

from .algebra import (
    BUILTIN_NAMES,
    CATALOG,
    BuiltinAlgebra,
    Flags,
    LabelAlgebra,
    MonoidHom,
    TableAlgebra,
    adjoin_identity,
    adjoin_zero,
    algebra_name,
    apply_hom,
    collapse_hom,
    compose_homs,
    is_cancellative,
    named_algebra,
    power_rig,
    product_algebra,
    sign_hom,
    sign_section,
    table_algebra,
    validate_algebra,
    validate_hom,
)
from .graphs import (
    Graph,
    GraphMorphism,
    LabeledGraph,
    Semiautomaton,
    change_labels,
    compose_morphisms,
    from_semiautomaton,
    graph,
    grothendieck_morphism_check,
    identity_morphism,
    is_label_preserving,
    labeled_graph,
    pullback_labeling,
    undirected_components,
    validate_morphism,
)
from .additive import AdditiveMorphism, is_additive_morphism, pushforward_labeling
from .paths import (
    KleisliMorphism,
    Path,
    compose_kleisli,
    compose_paths,
    grade,
    is_kleisli_morphism,
    kleisli_identity,
    kleisli_respects_hom,
    path_end,
)
from .motifs import MOTIF_NAMES, builtin_motif, find_motifs, paths_between
from .open_graphs import (
    OpenGraph,
    OpenGraphMap,
    check_2morphism,
    compose,
    compose_2morphisms,
    empty_open,
    identity_open,
    iso_check,
    tensor,
)
from .homology import (
    Chain,
    H0Result,
    Relation,
    SimpleLoop,
    boundary_pair,
    brute_force_circulations,
    brute_force_h1,
    chain,
    chain_add,
    decompose_cycle,
    feedback,
    find_relations,
    h0,
    is_cycle,
    loop_polarity,
    minimal_elements,
    nat_chain,
    simple_loop,
    simple_loops,
)
from .emergence import (
    EmergenceReport,
    GluedGraph,
    MVReport,
    collapse_word,
    emergence_report,
    format_word,
    glue,
    grade_word,
    is_inherited_cycle,
    mv_check,
    side_projection,
)
from .model_io import (
    ModelFile,
    ModelFormatError,
    emit_model,
    export_dot,
    load_model,
    parse_model,
    save_model,
)
from .validation import ValidationReport, Violation

__version__ = "0.1.0"
