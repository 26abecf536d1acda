"""The cover of PGL_2(7) by the matrices of determinant +-1."""
from __future__ import annotations

from ..permgroup.pgl2 import Mat2, det_pm1_group, pgl2_action

_CACHE = {}


def build_det_pm1_cover():
    from .extension import CentralExtension

    if "det" not in _CACHE:
        P = pgl2_action()
        cover = det_pm1_group()
        z = Mat2.of(-1, 0, 0, -1)
        _CACHE["det"] = CentralExtension(cover, P.group, Mat2.to_perm, z, "2.PGL2(7) (det +-1)")
    return _CACHE["det"]


def diag(a, b):
    return Mat2.of(a, 0, 0, b)
