"""Norm of a finitely supported vector in a labelled space."""

from norms.evaluator import baernstein_norm, lp_norm, schreier_norm, sup_norm
from seqvec.vectors import FinVec
from spaces.labels import SpaceKind, SpaceLabel


def norm_in_space(label: SpaceLabel, x: FinVec) -> float:
    """||x|| in l_p, B_p, S_p or c_0 according to the label."""
    if label.kind is SpaceKind.LP:
        return lp_norm(x, label.parameter)
    if label.kind is SpaceKind.BP:
        return baernstein_norm(x, label.parameter).value
    if label.kind is SpaceKind.SP:
        return schreier_norm(x, label.parameter).value
    return sup_norm(x)
