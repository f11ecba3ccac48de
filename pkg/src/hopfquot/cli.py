"""Batch front-end: JSON problem files in, JSON reports out.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input.
The machine report goes to stdout (or --out) with sorted keys; a short
human summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from .datum import LatticeDatum, derived_consequences, family_datum, gamma33_datum, is_char_valued, validate_datum
from .hopf import HopfSC, build_twisted_quotient, verify_hopf_axioms
from .image import QSpec, hopf_image, theta_from_q
from .report import Report
from .scalars import UnitGroupSpec

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = 0
    samples: int = 50
    exhaustive: bool | None = None
    max_build_dim: int = 5000
    out: str | None = None
    emit_hopf: str | None = None


# ---------------------------------------------------------------------------
# schemas

_UNIT_GROUP = {
    "type": "object",
    "additionalProperties": False,
    "required": ["generators"],
    "properties": {
        "generators": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "order": {"type": ["integer", "null"], "minimum": 1},
                },
            },
        }
    },
}
_UNIT_VALUE = {"type": "object", "additionalProperties": {"type": "integer"}}

QSPEC_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["M", "N", "unit_group", "Q"],
    "properties": {
        "M": {"type": "integer", "minimum": 2},
        "N": {"type": "integer", "minimum": 2},
        "unit_group": _UNIT_GROUP,
        "Q": {"type": "array", "items": {"type": "array", "items": _UNIT_VALUE}},
    },
}

DATUM_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["M", "N", "unit_group", "G", "N_basis"],
    "properties": {
        "M": {"type": "integer", "minimum": 2},
        "N": {"type": "integer", "minimum": 2},
        "unit_group": _UNIT_GROUP,
        "G": {"type": "array", "items": {"type": "integer"}},
        "N_basis": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "Phi": {"type": "object", "additionalProperties": {"type": "object", "additionalProperties": _UNIT_VALUE}},
    },
}

_SCALAR = {"type": "array"}
HOPF_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["dimension", "labels", "scalars", "unit", "mult", "comult", "counit", "antipode"],
    "properties": {
        "dimension": {"type": "integer", "minimum": 1},
        "labels": {"type": "array", "items": {"type": "string"}},
        "scalars": {
            "type": "object",
            "additionalProperties": False,
            "required": ["L"],
            "properties": {"L": {"type": "integer", "minimum": 1}, "variables": {"type": "array", "items": {"type": "string"}}},
        },
        "unit": {"type": "array"},
        "mult": {"type": "array"},
        "comult": {"type": "array"},
        "counit": {"type": "array"},
        "antipode": {"type": "array"},
        "meta": {},
    },
}


def load_json(path: str, schema: dict) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        data = json.loads(text)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON: {e}") from e
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise InputError(f"{path}: schema violation at {where}: {e.message}") from e
    return data


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n"


# ---------------------------------------------------------------------------
# commands; each returns (report json, Report)


def _qspec(path: str) -> QSpec:
    data = load_json(path, QSPEC_SCHEMA)
    try:
        return QSpec.from_json(data)
    except (ValueError, KeyError) as e:
        raise InputError(f"{path}: {e}") from e


def cmd_theta(path: str, cfg: RunConfig):
    q = _qspec(path)
    rep = Report("theta")
    try:
        th = theta_from_q(q)
        rep.add("row and column products are 1", True)
    except AssertionError as e:
        rep.add("row and column products are 1", False, str(e))
        return {"report": rep.to_json()}, rep
    return {"M": q.M, "N": q.N, "theta": [[v.to_json() for v in row] for row in th], "report": rep.to_json()}, rep


def cmd_image(path: str, cfg: RunConfig):
    q = _qspec(path)
    res = hopf_image(q, build=True, max_build_dim=cfg.max_build_dim)
    if cfg.emit_hopf:
        if res.hopf is None:
            raise InputError("--emit-hopf: the Hopf image is infinite-dimensional or above the build limit")
        Path(cfg.emit_hopf).write_text(dumps(res.hopf.to_json()))
    return res.to_json(), res.checks


def cmd_validate_datum(path: str, cfg: RunConfig):
    data = load_json(path, DATUM_SCHEMA)
    try:
        d = LatticeDatum.from_json(data)
    except (ValueError, KeyError) as e:
        raise InputError(f"{path}: {e}") from e
    rep = validate_datum(d, samples=cfg.samples, seed=cfg.seed)
    out = {"datum": d.to_json(), "report": rep.to_json()}
    if rep.passed:
        cons = derived_consequences(d, samples=cfg.samples, seed=cfg.seed)
        rep.extend(cons, "consequence ")
        out["char_valued"] = is_char_valued(d)
        out["report"] = rep.to_json()
    return out, rep


def cmd_verify_hopf(path: str, cfg: RunConfig):
    data = load_json(path, HOPF_SCHEMA)
    try:
        A = HopfSC.from_json(data)
    except (ValueError, KeyError, TypeError, IndexError) as e:
        raise InputError(f"{path}: {e}") from e
    rep = verify_hopf_axioms(A, exhaustive=cfg.exhaustive)
    return {"dimension": A.dim, "report": rep.to_json()}, rep


def cmd_examples(name: str, cfg: RunConfig, m: int = 1, alpha: int = 0, beta: int = 0, order: int = 3):
    if m < 1:
        raise InputError("m must be positive")
    if name in ("A", "B"):
        d = family_datum(m, twisted=(name == "B"))
    elif name == "gamma33":
        if order < 1:
            raise InputError("order must be positive")
        z = UnitGroupSpec.of(z=order)
        d = gamma33_datum(m, z.value([alpha]), z.value([beta]))
    else:
        raise InputError(f"unknown example {name!r}; choose A, B or gamma33")
    rep = validate_datum(d, samples=cfg.samples, seed=cfg.seed)
    out = {"example": name, "m": m, "datum": d.to_json()}
    if name == "gamma33":
        out.update(alpha=alpha, beta=beta, order=order)
    if rep.passed:
        out["char_valued"] = is_char_valued(d)
        index = d.N.index()
        dim = d.gamma.M * d.gamma.N * index
        out["dimension"] = dim
        if dim <= cfg.max_build_dim:
            A = build_twisted_quotient(d)
            hrep = verify_hopf_axioms(A, exhaustive=cfg.exhaustive)
            rep.extend(hrep, "hopf ")
            out["is_commutative"] = A.is_commutative()
            out["is_cocommutative"] = A.is_cocommutative()
            if cfg.emit_hopf:
                Path(cfg.emit_hopf).write_text(dumps(A.to_json()))
    out["report"] = rep.to_json()
    return out, rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized property subsets")
    common.add_argument("--exhaustive", action="store_true", default=None, help="force exhaustive axiom loops")

    p = argparse.ArgumentParser(prog="hopfquot", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("theta", parents=[common], help="theta matrix of a Q file")
    s.add_argument("path")
    s = sub.add_parser("image", parents=[common], help="Hopf image of rho_Q")
    s.add_argument("path")
    s.add_argument("--emit-hopf", help="dump the finite Hopf image to this file")
    s.add_argument("--max-build-dim", type=int, default=5000)
    s = sub.add_parser("validate-datum", parents=[common], help="check a quotient datum file")
    s.add_argument("path")
    s.add_argument("--samples", type=int, default=50)
    s = sub.add_parser("verify-hopf", parents=[common], help="check the axioms of a Hopf algebra dump")
    s.add_argument("path")
    s = sub.add_parser("examples", parents=[common], help="build and verify a named family member")
    s.add_argument("name", help="A, B or gamma33")
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--alpha", type=int, default=0, help="exponent of the root of unity zeta_order")
    s.add_argument("--beta", type=int, default=0)
    s.add_argument("--order", type=int, default=3, help="order of the root of unity for gamma33")
    s.add_argument("--emit-hopf")
    s.add_argument("--samples", type=int, default=50)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        seed=args.seed,
        samples=getattr(args, "samples", 50),
        exhaustive=args.exhaustive,
        max_build_dim=getattr(args, "max_build_dim", 5000),
        out=args.out,
        emit_hopf=getattr(args, "emit_hopf", None),
    )
    try:
        if args.command == "theta":
            out, rep = cmd_theta(args.path, cfg)
        elif args.command == "image":
            out, rep = cmd_image(args.path, cfg)
        elif args.command == "validate-datum":
            out, rep = cmd_validate_datum(args.path, cfg)
        elif args.command == "verify-hopf":
            out, rep = cmd_verify_hopf(args.path, cfg)
        else:
            out, rep = cmd_examples(args.name, cfg, args.m, args.alpha, args.beta, args.order)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(out)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
