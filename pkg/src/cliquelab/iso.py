"""Canonical certificates and isomorphism tests."""

from __future__ import annotations

from . import kernels
from .graph import Graph


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant certificate; equal certificates iff isomorphic."""
    cert = g._cert
    if cert is None:
        cert = kernels.canonical_cert(g.n, g.adj)
        g._cert = cert
    return cert


def _invariant_key(g: Graph) -> tuple:
    return (g.n, g.edge_count(), tuple(sorted(a.bit_count() for a in g.adj)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if _invariant_key(g) != _invariant_key(h):
        return False
    return canonical_form(g) == canonical_form(h)
