from .certificates import lift_certificate, project_certificate
from .generators import (
    gen_bip4,
    gen_crosscomp,
    gen_planar_bipartite,
    gen_planar_subcubic,
    gen_setcover_to_wcs,
    gen_starlike,
    gen_wcs_to_wcm,
    steiner_parameters,
    wcs_blocking_weight,
)
from .instances import (
    Cnf,
    InstanceBuilder,
    LabeledInstance,
    ReductionError,
    SetCoverInstance,
    SteinerInstance,
)

__all__ = [
    "Cnf",
    "InstanceBuilder",
    "LabeledInstance",
    "ReductionError",
    "SetCoverInstance",
    "SteinerInstance",
    "gen_bip4",
    "gen_crosscomp",
    "gen_planar_bipartite",
    "gen_planar_subcubic",
    "gen_setcover_to_wcs",
    "gen_starlike",
    "gen_wcs_to_wcm",
    "lift_certificate",
    "project_certificate",
    "steiner_parameters",
    "wcs_blocking_weight",
]
