"""Fan Ramsey constructions, matchings and verifiers (C++ core)."""

from ._core import (
    CapExceeded,
    Graph,
    ParseError,
    TwoColoring,
    UnsupportedRange,
    brute_force_ramsey,
    chromatic_lower,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    dirac_threshold,
    edmonds_gallai,
    fan_ramsey_bounds,
    find_fan,
    from_edge_list,
    from_graph6,
    is_bigraphic,
    max_matching,
    path_graph,
    petersen_graph,
    realize_bigraphic,
    realize_interval,
    star_fan_formula,
    star_fan_lower,
    star_fan_lower_special,
    to_edge_list,
    to_graph6,
    turan_lower,
    verify_fan_fan_witness,
    verify_star_fan_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
