"""
Upper Koszul simplicial complexes of a monomial ideal and their reduced
homology over the rationals.

K^b(I) = {sigma ⊆ [p] : b - sigma >= 0 and x^(b - sigma) in I}. Faces are
ascending tuples of 0-based vertices; the empty face has dimension -1.
"""

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .ideal import MonomialIdeal

Face = Tuple[int, ...]


def upper_koszul_faces(ideal: MonomialIdeal, b: Sequence[int]) -> List[Face]:
    """All faces of K^b(I); empty when x^b is outside the ideal"""
    candidates = [i for i, x in enumerate(b) if x > 0]
    faces = []
    for size in range(len(candidates) + 1):
        for sigma in combinations(candidates, size):
            shifted = tuple(x - (1 if i in sigma else 0) for i, x in enumerate(b))
            if ideal.contains(shifted):
                faces.append(sigma)
    return faces


def boundary_rank(faces_k: Sequence[Face], faces_below: Sequence[Face]) -> int:
    """
    Rank of the boundary map C_k -> C_(k-1).

    The l-th vertex of a face is removed with sign (-1)^l. For k = 0 this is
    the augmentation onto the empty face.
    """
    if not faces_k or not faces_below:
        return 0
    row_of = {face: r for r, face in enumerate(faces_below)}
    rows = [[QQ(0)] * len(faces_k) for _ in faces_below]
    for col, face in enumerate(faces_k):
        for position in range(len(face)):
            facet = face[:position] + face[position + 1:]
            rows[row_of[facet]][col] = QQ((-1) ** position)
    return DomainMatrix(rows, (len(faces_below), len(faces_k)), QQ).rank()


def reduced_homology_ranks(faces: Sequence[Face]) -> Dict[int, int]:
    """
    dim H~_k for k = -1, ..., top dimension; zero ranks are omitted.

    The void complex (no faces at all) has no homology; the complex {∅}
    has rank 1 in degree -1.
    """
    if not faces:
        return {}
    by_dim: Dict[int, List[Face]] = {}
    for face in faces:
        by_dim.setdefault(len(face) - 1, []).append(face)
    top = max(by_dim)

    ranks = {k: boundary_rank(by_dim.get(k, []), by_dim.get(k - 1, [])) for k in range(0, top + 2)}
    homology = {}
    for k in range(-1, top + 1):
        dim = len(by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            homology[k] = dim
    return homology
