"""Weighted path homology over Z, Q and Z/p."""

from ._wph import (
    Error,
    InvariantError,
    IoError,
    NonInvertibleWeight,
    PathComplex,
    SchemaError,
    SyntaxError,
    UnsupportedRing,
    cylinder,
    digraph_paths,
    dumps,
    homology,
    hypergraph_complex,
    loads,
    omega_ranks,
    prism_identity_holds,
    read_path_complex,
    run_cli,
)

__all__ = [
    "Error",
    "InvariantError",
    "IoError",
    "NonInvertibleWeight",
    "PathComplex",
    "SchemaError",
    "SyntaxError",
    "UnsupportedRing",
    "cylinder",
    "digraph_paths",
    "dumps",
    "homology",
    "hypergraph_complex",
    "loads",
    "omega_ranks",
    "prism_identity_holds",
    "read_path_complex",
    "run_cli",
]
