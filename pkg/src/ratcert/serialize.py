"""JSON encoding for instances and certificates.

Rationals travel as strings ``"p/q"`` or ``"p"`` (integers are also accepted
on input).  Instances are hashed over their canonical JSON form: semantic
fields only, keys sorted, no whitespace, rationals in lowest terms.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from . import alternatives as alt
from .ratlin import RatMat, RatVec, cols, format_rat, mat, parse_rat, rows, vec

INSTANCE_KINDS = ("far", "fred", "stiemke", "alt", "lp", "market", "game")


class FormatError(ValueError):
    """Malformed instance, certificate, or rational literal."""


@dataclass(frozen=True, slots=True)
class Instance:
    """Parsed instance file: which fields are set depends on ``kind``."""

    kind: str
    A: RatMat
    b: RatVec | None = None
    c: RatVec | None = None
    claim: RatVec | None = None


def encode_vec(v: RatVec) -> list[str]:
    return [format_rat(e) for e in v]


def encode_mat(M: RatMat) -> list[list[str]]:
    return [[format_rat(e) for e in row] for row in M]


def decode_vec(data) -> RatVec:
    if not isinstance(data, list) or not data:
        raise FormatError("a vector must be a nonempty JSON array")
    try:
        return vec(parse_rat(e) for e in data)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def decode_mat(data) -> RatMat:
    if not isinstance(data, list) or not data:
        raise FormatError("a matrix must be a nonempty JSON array of arrays")
    try:
        return mat([parse_rat(e) for e in row] for row in data)
    except FormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


_FIELDS = {
    "far": ("A", "b"),
    "fred": ("A", "b"),
    "stiemke": ("A",),
    "alt": ("A",),
    "lp": ("A", "b", "c"),
    "market": ("assets", "states", "A", "claim"),
    "game": ("A",),
}
_OPTIONAL = {"market": ("claim",)}


def parse_instance(data, expected_kind: str | None = None) -> Instance:
    """Parse a JSON instance object.

    The ``kind`` field may be omitted when the caller supplies
    ``expected_kind`` (for example, the subcommand name); when both are
    present they must agree.
    """
    if not isinstance(data, dict):
        raise FormatError("an instance must be a JSON object")
    kind = data.get("kind", expected_kind)
    if kind is None:
        raise FormatError("instance is missing its kind")
    if kind not in INSTANCE_KINDS:
        raise FormatError(f"unknown instance kind {kind!r}")
    if expected_kind is not None and kind != expected_kind:
        raise FormatError(f"instance kind {kind!r} does not match the requested {expected_kind!r}")
    allowed = set(_FIELDS[kind]) | {"kind"}
    unknown = set(data) - allowed
    if unknown:
        raise FormatError(f"unexpected instance fields: {sorted(unknown)}")
    required = [
        f for f in _FIELDS[kind] if f not in _OPTIONAL.get(kind, ()) and f not in data
    ]
    if required:
        raise FormatError(f"instance is missing fields: {required}")

    A = decode_mat(data["A"])
    b = decode_vec(data["b"]) if "b" in data else None
    c = decode_vec(data["c"]) if "c" in data else None
    claim = decode_vec(data["claim"]) if "claim" in data else None
    if kind in ("far", "fred", "lp") and len(b) != rows(A):
        raise FormatError("b length must match the matrix row count")
    if kind == "lp" and len(c) != cols(A):
        raise FormatError("c length must match the matrix column count")
    if kind == "market":
        if data["assets"] != rows(A) or data["states"] != cols(A):
            raise FormatError("assets/states fields must match the matrix shape")
        if claim is not None and len(claim) != cols(A):
            raise FormatError("claim length must match the state count")
    return Instance(kind=kind, A=A, b=b, c=c, claim=claim)


def load_instance(path: str, expected_kind: str | None = None) -> Instance:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON ({exc})") from exc
    return parse_instance(data, expected_kind)


def canonical_instance(instance: Instance) -> dict:
    """Semantic fields of the instance, JSON-ready, for canonical hashing."""
    out: dict = {"kind": instance.kind, "A": encode_mat(instance.A)}
    if instance.kind in ("far", "fred", "lp"):
        out["b"] = encode_vec(instance.b)
    if instance.kind == "lp":
        out["c"] = encode_vec(instance.c)
    if instance.kind == "market":
        out["assets"] = rows(instance.A)
        out["states"] = cols(instance.A)
        if instance.claim is not None:
            out["claim"] = encode_vec(instance.claim)
    return out


def instance_digest(instance: Instance) -> str:
    canonical = json.dumps(canonical_instance(instance), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


_VARIANTS = {
    "separation": ("far", alt.Separation, "xi", "functional"),
    "combination": ("far", alt.Combination, "q", "coefficients"),
    "orthogonal": ("fred", alt.Orthogonal, "xi", "functional"),
    "solution": ("fred", alt.Solution, "x", "x"),
    "semipositive_row": ("stiemke", alt.SemiPositiveRow, "xi", "functional"),
    "interior_measure": ("stiemke", alt.InteriorMeasure, "p", "measure"),
    "nonneg_row": ("alt", alt.NonNegRow, "p", "row_weights"),
    "neg_col": ("alt", alt.NegCol, "q", "col_weights"),
}
_BY_TYPE = {ctor: (variant, kind, key, attr) for variant, (kind, ctor, key, attr) in _VARIANTS.items()}
# The arbitrage subcommand prints these synonymous variants; they decode to
# the same certificate objects as their row/measure counterparts.
_VARIANTS["arbitrage"] = ("stiemke", alt.SemiPositiveRow, "strategy", "functional")
_VARIANTS["no_arbitrage"] = ("stiemke", alt.InteriorMeasure, "measure", "measure")


def encode_certificate(certificate) -> dict:
    """JSON object (``variant`` plus one payload field) for a certificate."""
    info = _BY_TYPE.get(type(certificate))
    if info is None:
        raise FormatError(f"cannot encode certificate of type {type(certificate).__name__}")
    variant, _, key, attr = info
    return {"variant": variant, key: encode_vec(getattr(certificate, attr))}


def certificate_kind(certificate) -> str:
    info = _BY_TYPE.get(type(certificate))
    if info is None:
        raise FormatError(f"unknown certificate type {type(certificate).__name__}")
    return info[1]


def decode_certificate(data) -> tuple[str, object]:
    """Parse a certificate object; returns (problem kind, certificate)."""
    if not isinstance(data, dict) or "variant" not in data:
        raise FormatError("a certificate must be a JSON object with a variant field")
    info = _VARIANTS.get(data["variant"])
    if info is None:
        raise FormatError(f"unknown certificate variant {data['variant']!r}")
    kind, ctor, key, _ = info
    if key not in data:
        raise FormatError(f"certificate variant {data['variant']!r} needs field {key!r}")
    extra = set(data) - {"variant", key}
    if extra:
        raise FormatError(f"unexpected certificate fields: {sorted(extra)}")
    return kind, ctor(decode_vec(data[key]))


def certificate_file(instance: Instance, certificate) -> dict:
    """Full certificate file contents: kind, instance hash, certificate."""
    return {
        "kind": certificate_kind(certificate),
        "instance_hash": instance_digest(instance),
        "certificate": encode_certificate(certificate),
    }


def load_certificate(path: str) -> tuple[str, object, str | None]:
    """Read a certificate file.

    Accepts either the full form (``kind``/``instance_hash``/``certificate``)
    or a bare certificate object as printed on standard output.  Returns
    (kind, certificate, instance hash or None).
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise FormatError("a certificate file must hold a JSON object")
    if "certificate" in data:
        kind, certificate = decode_certificate(data["certificate"])
        declared = data.get("kind")
        if declared is not None and declared != kind:
            raise FormatError(
                f"declared kind {declared!r} does not match certificate variant kind {kind!r}"
            )
        return kind, certificate, data.get("instance_hash")
    kind, certificate = decode_certificate(data)
    return kind, certificate, None
