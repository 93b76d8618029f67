"""Problem files in, JSON-ready reports out.

Every rational crosses the boundary as a string (``"p/q"`` or ``"p"``).
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import ratlin as rl
from .components import Basis, component_set, components_of
from .errors import InputError

SCHEMA_VERSION = 1
CLOSURE_NOTE = "user-supplied closure: components taken as given, limits not computed"
COINCIDENCE_NOTE = (
    "weak_only classes have the weak star property without the strict one; "
    "the two properties are reported independently and need not coincide in l_inf^n")
_KINDS = ("basis", "component_set", "extreme_points")


@dataclass(frozen=True)
class Problem:
    kind: str
    data: object
    n: Optional[int] = None
    s: Optional[int] = None
    query_beta: Optional[tuple] = None
    source: Optional[str] = None
    raw: Optional[dict] = None

    def space(self):
        """The component set to analyse (W itself for operator problems)."""
        if self.kind == "basis":
            return components_of(self.data)
        if self.kind == "component_set":
            return self.data
        from .opspace import operator_space_basis

        return components_of(operator_space_basis(self.data))


def _positive_int(doc, key):
    value = doc.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InputError(f"'{key}' must be a positive integer, got {value!r}")
    return value


def parse_problem(doc):
    if not isinstance(doc, dict):
        raise InputError("problem file must hold a JSON object")
    version = doc.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {version!r} (expected {SCHEMA_VERSION})")
    present = [k for k in _KINDS if k in doc]
    if len(present) != 1:
        raise InputError(f"exactly one of {', '.join(_KINDS)} is required, found {present or 'none'}")
    kind = present[0]
    if kind == "basis":
        data = Basis(doc["basis"])
    elif kind == "component_set":
        data = component_set(doc["component_set"])
    else:
        from .opspace import validate_extreme_set

        data = validate_extreme_set(doc["extreme_points"])
    beta = doc.get("query_beta")
    return Problem(
        kind=kind,
        data=data,
        n=_positive_int(doc, "n"),
        s=_positive_int(doc, "s"),
        query_beta=rl.as_vector(beta) if beta is not None else None,
        source=doc.get("source"),
        raw=doc,
    )


def load_problem(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_problem(doc)


def q(x):
    return rl.format_rational(x)


def vec(v):
    return [q(x) for x in v]


def echo(problem):
    out = {"version": SCHEMA_VERSION, "kind": problem.kind}
    if problem.kind == "basis":
        out["basis"] = [vec(r) for r in problem.data.vectors]
    elif problem.kind == "component_set":
        out["component_set"] = [vec(c) for c in problem.data.components]
    else:
        out["extreme_points"] = [vec(p) for p in problem.data.points]
    for key in ("n", "s"):
        if getattr(problem, key) is not None:
            out[key] = getattr(problem, key)
    if problem.query_beta is not None:
        out["query_beta"] = vec(problem.query_beta)
    if problem.source:
        out["source"] = problem.source
    return out


def star_report_json(strict_report, weak_report):
    weak_by_rep = {c.representative: v for c, v in zip(weak_report.classes, weak_report.verdicts)}
    classes = []
    for cls, verdict, cert in zip(strict_report.classes, strict_report.verdicts,
                                  strict_report.certificates):
        entry = {
            "representative": vec(cls.representative),
            "members": list(cls.members),
            "verdict": verdict,
            "weak_route": weak_by_rep[cls.representative],
        }
        if cert is not None:
            entry["beta"] = vec(cert.beta)
            entry["margin"] = q(cert.margin)
        classes.append(entry)
    out = {
        "m": strict_report.m,
        "strict_count": strict_report.strict_count,
        "weak_count": weak_report.weak_count,
        "classes": classes,
        "strict_classes": [vec(c.representative) for c in strict_report.strict_classes],
        "weak_classes": [vec(c.representative) for c in weak_report.weak_classes],
        "weak_not_strict": [vec(c.representative) for c in strict_report.divergent_classes],
    }
    if strict_report.divergent_classes:
        out["note"] = COINCIDENCE_NOTE
    return out


def face_json(face):
    return {
        "tight_set": list(face.tight_set),
        "signs": list(face.signs),
        "face_dim": face.dim_estimate,
    }


def vertex_list_json(vl):
    return {
        "vertex_count": len(vl),
        "vertices": [dict(beta=vec(v), **face_json(f)) for v, f in zip(vl.vertices, vl.faces)],
    }


def facets_json(facets):
    return {
        "facet_count": 2 * sum(f.is_facet for f in facets),
        "classes": [
            {"representative": vec(f.cls.representative), "facet": f.is_facet,
             "witness": vec(f.witness)}
            for f in facets
        ],
    }


def verdict_json(v, s=None):
    out = {
        "m": v.m,
        "n": v.n,
        "r": v.strict_count,
        "weak_count": v.weak_count,
        "facet_count": v.facet_count,
        "extreme_count": v.extreme_count,
        "iso_to_linf_m": v.iso_to_linf_m,
        "embeddable_min_s": v.embeddable_min_s,
    }
    if s is not None:
        out["s"] = s
        out["embeddable_into_s"] = v.embeddable_into(s)
    return out


def embedding_json(emb):
    return {
        "r": emb.r,
        "strict_representatives": [vec(c) for c in emb.strict_reps],
        "image_basis": [vec(row) for row in emb.image_basis.vectors],
        "isometry_verified": True,
    }


def opspace_json(rep):
    return {
        "m": rep.m,
        "n": rep.n,
        "r": rep.r,
        "w_basis": [vec(row) for row in rep.w_basis.vectors],
        "strict_count": rep.strict_count,
        "facet_count": rep.facet_count,
        "facet_formula": rep.facet_formula,
        "ext_w": rep.ext_w,
        "w_vertices": [vec(v) for v in rep.w_vertices],
        "extreme_contractions": rep.extreme_contractions,
        "extreme_formula": rep.extreme_formula,
        "cross_checked": rep.cross_checked,
        "note": "counts are invariant under invertible linear maps of B_X; "
                "a rational affine model gives the same counts as the metric one",
    }


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def render_text(obj):
    """Fixed-width text: scalars as ``key: value``, lists of records as tables."""
    lines = []
    if "summary" in obj:
        lines.append(obj["summary"])
    _render(obj, lines, "")
    return "\n".join(lines) + "\n"


def _cell(value):
    if isinstance(value, list):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render(obj, lines, indent):
    for key, value in obj.items():
        if key == "summary":
            continue
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            _render(value, lines, indent + "  ")
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            cols = list(dict.fromkeys(k for v in value for k in v))
            table = [cols] + [[_cell(v.get(c, "")) for c in cols] for v in value]
            widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
            for row in table:
                lines.append(indent + "  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
