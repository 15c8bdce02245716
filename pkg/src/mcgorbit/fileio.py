"""JSON-shaped text formats for every artifact.

Rationals travel as "p/q" strings (plain "p" when the denominator is 1),
matrix entries as coefficient vectors over the declared field, so files
stay diffable and round-trip bit-exactly; no floating point anywhere.

    field:          {"var": "z", "minpoly": ["1", "0", "1"]}
    representation: {"field": {...}, "shape": {"kind": "free", "rank": 2},
                     "matrices": [[[ ["1"], ["0"] ], ...], ...]}
    automorphism:   {"rank": 2, "images": ["x1 x2", "x2"],
                     "inverse_images": ["x1 x2^-1", "x2"]}
    certificate:    {"certificate": "conjugator", "field": {...}, "matrix": [...]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .autgen import Substitution
from .conj import ConjugacyVerdict
from .errors import InputError
from .finimg import ImageVerdict, ScreenReport
from .matrep import (
    GroupShape,
    RepTuple,
    SquareMatrix,
    free_shape,
    surface_shape,
)
from .numfield import FieldElement, NumberField, field_new
from .orbit import OrbitResult
from .words import Word, parse_word, word_str


def fraction_from_str(text) -> Fraction:
    if not isinstance(text, str):
        raise InputError(f"rational must be a string, got {type(text).__name__}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from exc


def fraction_str(q: Fraction) -> str:
    return str(q)


def field_to_obj(field: NumberField) -> dict:
    return {
        "var": field.var,
        "minpoly": [fraction_str(c) for c in field.minpoly],
    }


def field_from_obj(obj) -> NumberField:
    if not isinstance(obj, dict):
        raise InputError("field spec must be an object")
    var = obj.get("var", "x")
    if not isinstance(var, str) or not var:
        raise InputError("field var must be a nonempty string")
    minpoly = obj.get("minpoly")
    if not isinstance(minpoly, list) or not minpoly:
        raise InputError("field minpoly must be a nonempty list")
    coeffs = [fraction_from_str(c) for c in minpoly]
    assume = bool(obj.get("assume_irreducible", False))
    return field_new(coeffs, var=var, assume_irreducible=assume)


def element_to_obj(e: FieldElement) -> list[str]:
    return [fraction_str(c) for c in e.coeffs]


def element_from_obj(field: NumberField, obj) -> FieldElement:
    if not isinstance(obj, list):
        raise InputError("field element must be a coefficient list")
    return field.element([fraction_from_str(c) for c in obj])


def matrix_to_obj(m: SquareMatrix) -> list:
    return [[element_to_obj(c) for c in row] for row in m.entries]


def matrix_from_obj(field: NumberField, obj) -> SquareMatrix:
    if not isinstance(obj, list) or not obj:
        raise InputError("matrix must be a nonempty list of rows")
    rows = []
    for row in obj:
        if not isinstance(row, list) or len(row) != len(obj):
            raise InputError("matrix must be square")
        rows.append([element_from_obj(field, cell) for cell in row])
    return SquareMatrix.from_rows(field, rows)


def shape_to_obj(shape: GroupShape) -> dict:
    if shape.kind == "free":
        return {"kind": "free", "rank": shape.rank}
    return {"kind": "surface", "genus": shape.genus, "punctures": shape.punctures}


def shape_from_obj(obj) -> GroupShape:
    if not isinstance(obj, dict):
        raise InputError("shape must be an object")
    kind = obj.get("kind")
    if kind == "free":
        rank = obj.get("rank")
        if not isinstance(rank, int):
            raise InputError("free shape needs an integer rank")
        return free_shape(rank)
    if kind == "surface":
        genus, punctures = obj.get("genus"), obj.get("punctures")
        if not isinstance(genus, int) or not isinstance(punctures, int):
            raise InputError("surface shape needs integer genus and punctures")
        return surface_shape(genus, punctures)
    raise InputError(f"unknown shape kind {kind!r}")


def rep_to_obj(rep: RepTuple) -> dict:
    return {
        "field": field_to_obj(rep.field),
        "shape": shape_to_obj(rep.shape),
        "matrices": [matrix_to_obj(m) for m in rep.matrices],
    }


def rep_from_obj(obj) -> RepTuple:
    if not isinstance(obj, dict):
        raise InputError("representation must be an object")
    for key in ("field", "shape", "matrices"):
        if key not in obj:
            raise InputError(f"representation is missing {key!r}")
    field = field_from_obj(obj["field"])
    shape = shape_from_obj(obj["shape"])
    mats = obj["matrices"]
    if not isinstance(mats, list):
        raise InputError("matrices must be a list")
    return RepTuple(shape, tuple(matrix_from_obj(field, m) for m in mats))


def substitution_to_obj(sigma: Substitution) -> dict:
    return {
        "rank": sigma.rank,
        "images": [word_str(w) for w in sigma.images],
        "inverse_images": [word_str(w) for w in sigma.inverse_images],
    }


def substitution_from_obj(obj) -> Substitution:
    if not isinstance(obj, dict):
        raise InputError("automorphism must be an object")
    rank = obj.get("rank")
    if not isinstance(rank, int):
        raise InputError("automorphism needs an integer rank")
    images = obj.get("images")
    inverse_images = obj.get("inverse_images")
    if not isinstance(images, list) or not isinstance(inverse_images, list):
        raise InputError("automorphism needs images and inverse_images lists")
    return Substitution(
        rank=rank,
        images=tuple(parse_word(w) for w in images),
        inverse_images=tuple(parse_word(w) for w in inverse_images),
    )


def conjugator_certificate_obj(field: NumberField, b: SquareMatrix) -> dict:
    return {
        "certificate": "conjugator",
        "field": field_to_obj(field),
        "matrix": matrix_to_obj(b),
    }


def conjugacy_verdict_to_obj(v: ConjugacyVerdict, field: NumberField) -> dict:
    out: dict = {"verdict": v.kind}
    if v.basis_dimension is not None:
        out["intertwiner_dimension"] = v.basis_dimension
    if v.kind == "not_conjugate":
        out["scope"] = "over declared field K" if v.over_field_only else "absolute"
    if v.conjugator is not None:
        out["conjugator"] = conjugator_certificate_obj(field, v.conjugator)
    return out


def orbit_result_to_obj(result: OrbitResult, include_representatives: bool = True) -> dict:
    out: dict = {"verdict": result.verdict, "flags": result.flags}
    if result.class_count is not None:
        out["classes"] = result.class_count
    if result.edges:
        out["edges"] = [[i, label, j] for i, label, j in result.edges]
    if include_representatives and result.representatives:
        out["representatives"] = [rep_to_obj(r) for r in result.representatives]
    if result.diagnostics is not None:
        out["diagnostics"] = result.diagnostics
    if result.witness is not None:
        out["witness"] = result.witness
    return out


def word_to_obj(w: Word) -> str:
    return word_str(w)


def image_verdict_to_obj(v: ImageVerdict) -> dict:
    out: dict = {"verdict": v.kind}
    if v.order is not None:
        out["order"] = v.order
    if v.witness is not None:
        out["witness"] = {"word": word_to_obj(v.witness), "reason": v.reason}
    if v.elements_found is not None:
        out["elements_found"] = v.elements_found
    return out


def screen_report_to_obj(report: ScreenReport) -> dict:
    det: dict = {"result": report.det.kind, "advisory": report.det.advisory}
    if report.det.orders is not None:
        det["orders"] = list(report.det.orders)
    if report.det.witness_index is not None:
        det["witness_generator"] = report.det.witness_index
    integrality: dict = {"result": report.integrality.kind}
    if report.integrality.position is not None:
        gen, row, col = report.integrality.position
        integrality["position"] = {"generator": gen, "row": row, "col": col}
    out: dict = {"determinant_screen": det, "integrality_screen": integrality}
    if report.exponent_sample is not None:
        out["exponent_sample"] = report.exponent_sample
    if report.infinite_order_word is not None:
        out["infinite_order_word"] = word_to_obj(report.infinite_order_word)
    return out


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def load_rep(path) -> RepTuple:
    return rep_from_obj(load_json(path))


def load_substitution(path) -> Substitution:
    return substitution_from_obj(load_json(path))


def load_matrix_certificate(path) -> tuple[NumberField, SquareMatrix]:
    obj = load_json(path)
    if not isinstance(obj, dict) or obj.get("certificate") != "conjugator":
        raise InputError("not a conjugator certificate file")
    field = field_from_obj(obj.get("field"))
    return field, matrix_from_obj(field, obj.get("matrix"))


def write_text(path, text: str):
    Path(path).write_text(text)


def detect_kind(obj) -> str:
    if isinstance(obj, dict):
        if "matrices" in obj:
            return "representation"
        if "images" in obj:
            return "automorphism"
        if obj.get("certificate") == "conjugator":
            return "certificate"
    raise InputError("unrecognized file contents")


def canonicalize_obj(obj) -> tuple[str, dict]:
    """Validate and re-emit a parsed input file; returns (kind, canonical)."""
    kind = detect_kind(obj)
    if kind == "representation":
        return kind, rep_to_obj(rep_from_obj(obj))
    if kind == "automorphism":
        return kind, substitution_to_obj(substitution_from_obj(obj))
    field = field_from_obj(obj.get("field"))
    matrix = matrix_from_obj(field, obj.get("matrix"))
    return kind, conjugator_certificate_obj(field, matrix)
