"""Model files: JSON documents describing a quotient model or a finite G-set model.

Files are schema-validated before anything is built.  Every failure raises
``InputError`` naming the offending field, so callers can map it to exit code 2.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from typing import Optional, Union

import jsonschema

from .confun import GSet, gset_from_generators
from .cyclo import FieldTooSmall, LiteralError, Matrix, field
from .grp import DEFAULT_CAP, GroupError, abstract_group, generate_group, permutation_group
from .model import AFFINE, PROJECTIVE, ModelError, QuotientModel

GSET = "gset"


class InputError(ValueError):
    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


_SCHEMA = None


def schema() -> dict:
    global _SCHEMA
    if _SCHEMA is None:
        _SCHEMA = json.loads(resources.files("orbinv").joinpath("schema.json").read_text())
    return _SCHEMA


@dataclass
class LoadedModel:
    name: str
    kind: str
    data: dict
    sha256: str
    model: Union[QuotientModel, GSet]
    suite: Optional[dict] = None
    source: str = ""
    extra: dict = dc_field(default_factory=dict)


def canonical_bytes(data: dict) -> bytes:
    return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode()


def _field_path(path) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


def validate(data) -> None:
    validator = jsonschema.Draft202012Validator(schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: (len(e.path), list(map(str, e.path))))
    if errors:
        err = max(errors, key=lambda e: len(e.path))
        raise InputError(err.message, _field_path(err.absolute_path))


def load_model_file(path: str) -> LoadedModel:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", path) from None
    try:
        data = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError:
        raise InputError("file is not UTF-8", path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", path) from None
    return load_model_dict(data, raw=raw, source=path)


def load_model_dict(data, raw: Optional[bytes] = None, source: str = "") -> LoadedModel:
    validate(data)
    digest = hashlib.sha256(raw if raw is not None else canonical_bytes(data)).hexdigest()
    kind = data["kind"]
    cap = data.get("cap", DEFAULT_CAP)
    name = data["name"]
    try:
        if kind == GSET:
            model = _build_gset(data, cap)
        else:
            model = _build_quotient(data, cap)
    except (GroupError, FieldTooSmall, ModelError) as exc:
        raise InputError(str(exc), "generators") from None
    return LoadedModel(name, kind, data, digest, model, data.get("suite"), source)


def _build_quotient(data, cap) -> QuotientModel:
    N, n = data["root_order"], data["dimension"]
    fld = field(N)
    mats = []
    for k, gen in enumerate(data["generators"]):
        where = f"generators[{k}]"
        if len(gen) != n or any(len(r) != n for r in gen):
            raise InputError(f"expected a {n}x{n} matrix", where)
        rows = []
        for i, row in enumerate(gen):
            out = []
            for j, entry in enumerate(row):
                try:
                    out.append(Matrix.from_strings(fld, [[entry]]).rows[0][0])
                except LiteralError as exc:
                    raise InputError(str(exc), f"{where}[{i}][{j}]") from None
            rows.append(out)
        mats.append(Matrix(fld, rows))
    group = generate_group(mats, cap, fld=fld, dim=n, name=data["name"])
    kind = AFFINE if data["kind"] == "affine" else PROJECTIVE
    return QuotientModel(kind, group, name=data["name"])


def _build_gset(data, cap) -> GSet:
    if "group" in data:
        try:
            group = abstract_group(data["group"])
        except GroupError as exc:
            raise InputError(str(exc), "group") from None
    else:
        gens = data["generators"]
        degree = len(gens[0]) if gens else 1
        for k, p in enumerate(gens):
            if sorted(p) != list(range(degree)):
                raise InputError(f"not a permutation of 0..{degree - 1}", f"generators[{k}]")
        group = permutation_group(gens, degree=degree, cap=cap, name=data["name"])
    m = data["points"]
    actions = data["actions"]
    if len(actions) != len(group.generators):
        raise InputError(f"need {len(group.generators)} action permutations, got {len(actions)}", "actions")
    for k, p in enumerate(actions):
        if sorted(p) != list(range(m)):
            raise InputError(f"not a permutation of the {m} points", f"actions[{k}]")
    try:
        return gset_from_generators(group, actions, m, name=data["name"])
    except ValueError as exc:
        raise InputError(str(exc), "actions") from None
