"""Bit-exact serialization: certificate JSON documents, DOT graph export,
and CSV sweep tables.

The certificate schema is versioned and uses integers for all
combinatorial data; the only floats are the sampling probabilities echoed
for provenance. Field order is fixed so equal runs produce byte-identical
files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .certify import Certificate, Conclusions, SubsetEdgeCount
from .hypergraph import Graph, Hypergraph, Matching
from .matching import CORRUPT, MatchabilityReport, VertexOutcome
from .sampling import ConstructionParams, SweepPoint
from .sparsity import SparsityVerdict, Violator

SCHEMA_VERSION = 1

_STATUSES = {"matched", "unmatchable", "timeout", "skipped", "corrupt"}


class CertificateFormatError(Exception):
    """The document is not a well-formed certificate."""


def certificate_to_dict(cert: Certificate, search: dict | None = None) -> dict:
    params = cert.params
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": cert.tool_version,
        "seed": cert.seed,
        "params": {
            "r": params.r,
            "s": params.s,
            "m": params.m,
            "k": params.k,
            "n": params.n,
            "C": params.C,
            "l": params.l,
            "p": params.p,
            "q": params.q,
        },
        "hypergraph": {"n": cert.hypergraph.n, "edges": [list(e) for e in cert.hypergraph.edges]},
        "graph": {"n": cert.graph.n, "edges": [list(e) for e in cert.graph.edges]},
        "matchability": None,
        "sparsity": None,
        "min_subset_edges": None,
        "conclusions": {
            "chi": cert.conclusions.chi,
            "vertex_critical": cert.conclusions.vertex_critical,
            "robust_to_r": cert.conclusions.robust_to_r,
        },
    }
    if cert.matchability is not None:
        doc["matchability"] = {
            "all_matchable": cert.matchability.all_matchable,
            "per_vertex": [
                {
                    "vertex": v,
                    "status": outcome.status,
                    "matching": None
                    if outcome.matching is None
                    else [list(e) for e in outcome.matching.edges],
                }
                for v, outcome in sorted(cert.matchability.per_vertex.items())
            ],
        }
    if cert.sparsity is not None:
        doc["sparsity"] = {
            "holds": cert.sparsity.holds,
            "m": cert.sparsity.m,
            "s": cert.sparsity.s,
            "violator": None
            if cert.sparsity.violator is None
            else {
                "edge_indices": list(cert.sparsity.violator.edge_indices),
                "spanned": cert.sparsity.violator.spanned,
            },
        }
    if cert.min_subset_edges is not None:
        doc["min_subset_edges"] = {
            "count": cert.min_subset_edges.count,
            "witness": list(cert.min_subset_edges.witness),
            "exact": cert.min_subset_edges.exact,
        }
    if search is not None:
        doc["search"] = search
    return doc


def certificate_to_json(cert: Certificate, search: dict | None = None) -> str:
    return json.dumps(certificate_to_dict(cert, search=search), indent=2) + "\n"


def write_certificate(cert: Certificate, path: str | Path, search: dict | None = None) -> None:
    Path(path).write_text(certificate_to_json(cert, search=search))


def _require(doc: dict, key: str, kinds) -> object:
    if key not in doc:
        raise CertificateFormatError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kinds):
        raise CertificateFormatError(f"field {key!r} has wrong type {type(value).__name__}")
    return value


def certificate_from_dict(doc: dict) -> Certificate:
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate document must be an object")
    version = _require(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise CertificateFormatError(f"unsupported schema version {version}")

    raw_params = _require(doc, "params", dict)
    try:
        params = ConstructionParams(
            r=int(raw_params["r"]),
            s=int(raw_params["s"]),
            m=int(raw_params["m"]),
            k=int(raw_params["k"]),
            n=int(raw_params["n"]),
            C=float(raw_params["C"]),
            l=int(raw_params["l"]),
            p=float(raw_params["p"]),
            q=float(raw_params["q"]),
        )
    except (KeyError, TypeError, ValueError) as err:
        raise CertificateFormatError(f"bad params: {err}") from err

    try:
        raw_h = _require(doc, "hypergraph", dict)
        hypergraph = Hypergraph(int(raw_h["n"]), [tuple(e) for e in raw_h["edges"]])
        raw_g = _require(doc, "graph", dict)
        graph = Graph(int(raw_g["n"]), [tuple(e) for e in raw_g["edges"]])
    except (KeyError, TypeError, ValueError) as err:
        raise CertificateFormatError(f"bad combinatorial data: {err}") from err

    matchability = None
    if doc.get("matchability") is not None:
        raw_m = _require(doc, "matchability", dict)
        per_vertex: dict[int, VertexOutcome] = {}
        for entry in raw_m.get("per_vertex", []):
            if not isinstance(entry, dict):
                raise CertificateFormatError("per_vertex entries must be objects")
            v = int(entry["vertex"])
            status = entry["status"]
            if status not in _STATUSES:
                raise CertificateFormatError(f"unknown matching status {status!r}")
            witness = None
            if entry.get("matching") is not None:
                try:
                    witness = Matching(tuple(tuple(e) for e in entry["matching"]))
                except ValueError:
                    # Keep parsing: the semantic checker reports the broken
                    # witness instead of refusing the whole document.
                    status = CORRUPT
            per_vertex[v] = VertexOutcome(status=status, matching=witness)
        matchability = MatchabilityReport(
            per_vertex=per_vertex, all_matchable=bool(raw_m.get("all_matchable"))
        )

    sparsity = None
    if doc.get("sparsity") is not None:
        raw_s = _require(doc, "sparsity", dict)
        violator = None
        if raw_s.get("violator") is not None:
            violator = Violator(
                edge_indices=tuple(int(i) for i in raw_s["violator"]["edge_indices"]),
                spanned=int(raw_s["violator"]["spanned"]),
            )
        sparsity = SparsityVerdict(
            holds=bool(raw_s["holds"]), violator=violator, m=int(raw_s["m"]), s=int(raw_s["s"])
        )

    subset = None
    if doc.get("min_subset_edges") is not None:
        raw_c = _require(doc, "min_subset_edges", dict)
        subset = SubsetEdgeCount(
            count=int(raw_c["count"]),
            witness=tuple(int(v) for v in raw_c["witness"]),
            exact=bool(raw_c["exact"]),
        )

    raw_conc = _require(doc, "conclusions", dict)
    chi = raw_conc.get("chi")
    conclusions = Conclusions(
        chi=None if chi is None else int(chi),
        vertex_critical=bool(raw_conc["vertex_critical"]),
        robust_to_r=bool(raw_conc["robust_to_r"]),
    )

    return Certificate(
        params=params,
        hypergraph=hypergraph,
        graph=graph,
        matchability=matchability,
        sparsity=sparsity,
        min_subset_edges=subset,
        conclusions=conclusions,
        seed=int(_require(doc, "seed", int)),
        tool_version=str(_require(doc, "tool_version", str)),
    )


def read_certificate(path: str | Path) -> Certificate:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise CertificateFormatError(f"cannot read {path}: {err}") from err
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise CertificateFormatError(f"invalid JSON: {err}") from err
    return certificate_from_dict(doc)


def export_dot(g: Graph, path: str | Path) -> None:
    """Plain DOT text with nodes and edges in sorted order."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    Path(path).write_text("\n".join(lines) + "\n")


def write_sweep_csv(points: list[SweepPoint], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "p", "samples", "successes", "fraction"])
        for pt in points:
            writer.writerow([pt.n, repr(pt.p), pt.samples, pt.successes, repr(pt.fraction)])
