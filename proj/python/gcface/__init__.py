"""Face lattices and f-vectors of Gelfand-Cetlin polytopes."""

from ._gcface import (
    brute_force_faces,
    edge_count,
    f_polynomial,
    f_vector,
    faces,
    run_cli,
    verify_gkt_pde,
    verify_isomorphism,
    verify_main_pde,
)

__all__ = [
    "brute_force_faces",
    "edge_count",
    "f_polynomial",
    "f_vector",
    "faces",
    "run_cli",
    "verify_gkt_pde",
    "verify_isomorphism",
    "verify_main_pde",
]
