"""JSON serialization of Hopf data and reports.

File schema (all scalars as strings, conductor at file level):

    {
      "dim": 6,
      "cyclotomic_order": 3,
      "mult":    [[i, j, k, "c"], ...],   # e_i e_j = sum c e_k
      "comult":  [[i, j, k, "c"], ...],   # Delta(e_i) = sum c e_j (x) e_k
      "unit":    ["c", ...],
      "counit":  ["c", ...],
      "antipode": [[i, j, "c"], ...],     # S(e_i) = sum c e_j
      "r_matrix": [[i, j, "c"], ...],     # optional
      "basis_labels": [...],              # optional
      "name": "kS3"                       # optional
    }

Serialization is canonical (sorted triples, sorted keys, no whitespace
variation), so equal structures produce byte-identical files and the
content hash is meaningful.
"""

from __future__ import annotations

import hashlib
import json

from .errors import SchemaError
from .hopf import HopfAlgebra
from .scalars import CyclotomicField, parse_scalar, scalar_to_string


def hopf_to_dict(hopf: HopfAlgebra) -> dict:
    mult = []
    for i in range(hopf.dim):
        for j in range(hopf.dim):
            for k in sorted(hopf.mult[i][j]):
                c = hopf.mult[i][j][k]
                if not c.is_zero():
                    mult.append([i, j, k, scalar_to_string(c)])
    comult = []
    for i in range(hopf.dim):
        for (j, k) in sorted(hopf.comult[i]):
            c = hopf.comult[i][(j, k)]
            if not c.is_zero():
                comult.append([i, j, k, scalar_to_string(c)])
    antipode = []
    for i in range(hopf.dim):
        for j, c in enumerate(hopf.antipode[i]):
            if not c.is_zero():
                antipode.append([i, j, scalar_to_string(c)])
    out = {
        "dim": hopf.dim,
        "cyclotomic_order": hopf.field.conductor,
        "mult": mult,
        "comult": comult,
        "unit": [scalar_to_string(c) for c in hopf.unit],
        "counit": [scalar_to_string(c) for c in hopf.counit],
        "antipode": antipode,
    }
    if hopf.r_matrix:
        out["r_matrix"] = [
            [i, j, scalar_to_string(c)] for (i, j), c in sorted(hopf.r_matrix.items())
        ]
    if hopf.basis_labels:
        out["basis_labels"] = list(hopf.basis_labels)
    if hopf.name:
        out["name"] = hopf.name
    return out


def hopf_from_dict(data: dict) -> HopfAlgebra:
    try:
        dim = int(data["dim"])
        conductor = int(data["cyclotomic_order"])
        field = CyclotomicField(conductor)
        mult = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in data["mult"]:
            mult[i][j][k] = parse_scalar(field, c)
        comult = [dict() for _ in range(dim)]
        for i, j, k, c in data["comult"]:
            comult[i][(j, k)] = parse_scalar(field, c)
        unit = [parse_scalar(field, c) for c in data["unit"]]
        counit = [parse_scalar(field, c) for c in data["counit"]]
        antipode = [[field.zero] * dim for _ in range(dim)]
        for i, j, c in data["antipode"]:
            antipode[i][j] = parse_scalar(field, c)
        if len(unit) != dim or len(counit) != dim:
            raise SchemaError("unit/counit length does not match dim")
        r_matrix = None
        if "r_matrix" in data:
            r_matrix = {}
            for i, j, c in data["r_matrix"]:
                r_matrix[(i, j)] = parse_scalar(field, c)
        labels = data.get("basis_labels")
        if labels is not None and len(labels) != dim:
            raise SchemaError("basis_labels length does not match dim")
        return HopfAlgebra(field, dim, mult, unit, comult, counit, antipode,
                           r_matrix=r_matrix, basis_labels=labels,
                           name=data.get("name"))
    except SchemaError:
        raise
    except (KeyError, IndexError, TypeError, ValueError) as err:
        raise SchemaError(f"malformed Hopf data: {err}") from err


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def save_hopf(hopf: HopfAlgebra, path) -> str:
    text = dumps_canonical(hopf_to_dict(hopf))
    with open(path, "w") as fh:
        fh.write(text)
    return content_hash(text)


def load_hopf(path, verify=True, conductor_override=None):
    """Read a Hopf data file; returns (HopfAlgebra, content_hash).

    With verify (the default) the axiom report must be clean; an override
    conductor embeds the structure constants into the larger field.
    """
    try:
        with open(path) as fh:
            text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as err:
        raise SchemaError(f"cannot read Hopf data: {err}") from err
    hopf = hopf_from_dict(data)
    if conductor_override:
        if conductor_override % hopf.field.conductor != 0:
            raise SchemaError(
                f"override conductor {conductor_override} is not a multiple of "
                f"{hopf.field.conductor}"
            )
        hopf = hopf.with_field(conductor_override)
    if verify:
        report = hopf.verify()
        if not report.ok:
            from .errors import AxiomError
            raise AxiomError(report)
    return hopf, content_hash(text)


def coideal_to_dict(ctx, parent_hash=None, generators=None) -> dict:
    out = {
        "dim": ctx.dim,
        "basis": [[scalar_to_string(c) for c in row] for row in ctx.space.basis],
        "integral": [scalar_to_string(c) for c in ctx.integral],
        "dual_integral": [scalar_to_string(c) for c in ctx.dual_integral],
        "invariants_dim": ctx.invariants.dim,
        "is_normal": ctx.normal,
        "is_hopf_subalgebra": ctx.hopf_subalgebra,
    }
    if generators is not None:
        out["generators"] = list(generators)
    if parent_hash:
        out["parent_sha256"] = parent_hash
    return out
