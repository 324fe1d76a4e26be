"""
Generation Package
------------------
Musielak-Orlicz functions generated by matrices, the converse
construction, the ball B and the sandwich verifications.
"""

from .generated_space import Variant, Side, GeneratedSpace, functions_from_matrix, matrix_from_functions
from .ball import (ball_B_vertices, vertex_count, Lemma31Witness, decompose_lemma31,
                   sign_flip_decomposition, sample_boundary_points, VERTEX_LIMIT)
from .sandwich import (sandwich_passes, verify_rearrangement, verify_sandwich, verify_converse,
                       verify_lemma31, round_trip_error)

__all__ = [
    'Variant',
    'Side',
    'GeneratedSpace',
    'functions_from_matrix',
    'matrix_from_functions',
    'ball_B_vertices',
    'vertex_count',
    'Lemma31Witness',
    'decompose_lemma31',
    'sign_flip_decomposition',
    'sample_boundary_points',
    'VERTEX_LIMIT',
    'sandwich_passes',
    'verify_rearrangement',
    'verify_sandwich',
    'verify_converse',
    'verify_lemma31',
    'round_trip_error'
]
