"""Command-line front end: series and parameter ingestion, norm and
derivative evaluation, batch tables, verification suites, machine-readable
JSON/CSV output.

Exit codes: 0 all assertions passed, 2 parse error, 3 domain error,
4 tolerance or convergence failure.  Every float is printed with 17
significant digits so re-ingestion is lossless, and repeated invocations
produce byte-identical files.  The environment variable FFQ_CONFIG may point
at a JSON file of flag defaults.
"""

import argparse
import dataclasses
import json
import math
import os
import sys

import numpy as np

from . import verify as verify_mod
from .errors import DomainError, FFQError, INF, NoConvergence
from .ff_complex import (dirichlet_norm_closed_k1, dirichlet_norm_quad,
                         dirichlet_norm_series, coefficient_integrals,
                         ff_eval_c, inner_product_c, kernel_K_half)
from .ff_quaternionic import (ff_eval_q, qdirichlet_inner_product,
                              qdirichlet_norm, qdirichlet_norm_series)
from .ff_real import FFParams, ff_derivative_real
from .holo_series import CPowerSeries
from .quadrature import QuadratureSpec
from .quaternion import Quaternion, SliceFrame, E1, E2
from .slice_regular import QPowerSeries

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_TOLERANCE = 4


def fmt_float(x):
    """17 significant digits: enough for exact float64 round trips."""
    return format(float(x), ".17g")


def canonical_dumps(obj, indent=0):
    """Deterministic JSON text: sorted keys, 17-digit floats, no whitespace
    variation, so equal payloads serialize to equal bytes."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if math.isinf(obj) or math.isnan(obj):
            raise ValueError("non-finite floats must be encoded upstream")
        return fmt_float(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ",".join(json.dumps(k) + ":" + canonical_dumps(v)
                              for k, v in items) + "}"
    if isinstance(obj, (np.floating,)):
        return canonical_dumps(float(obj))
    if isinstance(obj, (np.integer,)):
        return str(int(obj))
    raise TypeError(f"cannot canonically encode {type(obj)!r}")


def encode_k(k):
    return "inf" if k == INF else int(k)


def decode_k(value):
    if value in ("inf", INF):
        return INF
    return int(value)


@dataclasses.dataclass
class JobSpec:
    """One CLI invocation's full input, round-trippable byte-identically."""

    command: str
    f: list = None
    g: list = None
    alpha: float = 1.0
    beta: float = 1.0
    sigma: float = 0.5
    k: object = 1
    frame: list = None
    z: list = None
    zeta: list = None
    t: float = None
    real_f: str = None
    method: str = "quad"
    suite: str = "all"
    alphas: list = None
    sigmas: list = None
    ks: list = None
    quad: dict = None
    out: str = None
    format: str = "json"

    def to_payload(self):
        d = dataclasses.asdict(self)
        d["k"] = encode_k(self.k)
        if self.ks is not None:
            d["ks"] = [encode_k(k) for k in self.ks]
        return d

    @classmethod
    def from_payload(cls, payload):
        data = dict(payload)
        if "k" in data:
            data["k"] = decode_k(data["k"])
        if data.get("ks") is not None:
            data["ks"] = [decode_k(k) for k in data["ks"]]
        return cls(**data)

    def to_json(self):
        return canonical_dumps(self.to_payload())

    @classmethod
    def from_json(cls, text):
        return cls.from_payload(json.loads(text))


def _read_json_arg(text):
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _series_payload(raw):
    """Normalise a coefficient payload: numbers, [re, im] pairs or
    [w, x, y, z] quadruples."""
    out = []
    for item in raw:
        if isinstance(item, (int, float)):
            out.append([float(item)])
        elif isinstance(item, list) and len(item) in (1, 2, 4) and all(
            isinstance(v, (int, float)) for v in item
        ):
            out.append([float(v) for v in item])
        else:
            raise DomainError(f"bad coefficient {item!r}: need a number, "
                              "[re, im] or [w, x, y, z]")
    return out


def complex_series(payload):
    coeffs = []
    for item in payload:
        if len(item) == 4 and (item[2] != 0.0 or item[3] != 0.0):
            raise DomainError("quaternionic coefficients in a complex job")
        coeffs.append(complex(item[0], item[1] if len(item) > 1 else 0.0))
    return CPowerSeries(coeffs)


def quaternion_series(payload):
    coeffs = []
    for item in payload:
        padded = list(item) + [0.0] * (4 - len(item))
        coeffs.append(Quaternion(*padded))
    return QPowerSeries(coeffs)


def parse_point(value):
    if isinstance(value, (int, float)):
        return complex(value)
    return complex(value[0], value[1] if len(value) > 1 else 0.0)


def build_frame(payload):
    if payload is None:
        return SliceFrame(E1, E2)
    return SliceFrame(Quaternion(*payload[0]), Quaternion(*payload[1]))


def build_quad_spec(quad):
    if not quad:
        return QuadratureSpec()
    return QuadratureSpec(**quad)


def build_params(job):
    return FFParams(alpha=job.alpha, sigma=job.sigma, k=job.k, beta=job.beta)


_REAL_FUNCTIONS = {
    "exp": math.exp,
    "sin-offset": lambda t: math.sin(t) + 2.0,
}


def _real_function(job):
    if job.real_f == "poly":
        coeffs = [float(c[0]) if isinstance(c, list) else float(c)
                  for c in (job.f or [])]
        return lambda t: sum(c * t ** n for n, c in enumerate(coeffs))
    if job.real_f in _REAL_FUNCTIONS:
        return _REAL_FUNCTIONS[job.real_f]
    raise DomainError(f"unknown built-in function {job.real_f!r}; "
                      f"choose poly, exp or sin-offset")


def _complex_pair(value):
    return [float(value.real), float(value.imag)]


def run(job):
    """Execute a job; returns (exit_code, document) where the document is a
    dict for JSON output or a list of row dicts for tabular output."""
    p = None
    spec = build_quad_spec(job.quad)
    if job.command == "deriv":
        if job.real_f is not None:
            fn = _real_function(job)
            value = ff_derivative_real(fn, build_params(job), job.t,
                                       method=job.method if job.method in ("closed", "limit") else "closed")
            return EXIT_OK, {"command": "deriv", "space": "real",
                             "t": job.t, "value": value,
                             "params": _params_doc(job)}
        f = complex_series(_series_payload(job.f))
        value = ff_eval_c(f, build_params(job), parse_point(job.z))
        return EXIT_OK, {"command": "deriv", "space": "complex",
                         "z": _complex_pair(parse_point(job.z)),
                         "value": _complex_pair(value),
                         "params": _params_doc(job)}
    if job.command == "qderiv":
        f = quaternion_series(_series_payload(job.f))
        frame = build_frame(job.frame)
        method = job.method if job.method in ("split", "direct") else "split"
        value = ff_eval_q(f, build_params(job), frame, parse_point(job.z),
                          method=method)
        return EXIT_OK, {"command": "qderiv",
                         "z": _complex_pair(parse_point(job.z)),
                         "value": list(value.components),
                         "params": _params_doc(job)}
    if job.command == "norm":
        f = complex_series(_series_payload(job.f))
        p = build_params(job)
        if job.g is not None:
            g = complex_series(_series_payload(job.g))
            value = inner_product_c(f, g, p, spec)
            return EXIT_OK, {"command": "norm",
                             "inner_product": _complex_pair(value),
                             "params": _params_doc(job)}
        if job.method == "series":
            ci = coefficient_integrals(p, max(f.degree, 0), spec)
            val = dirichlet_norm_series(f, p, ci)
        elif job.method == "closed-k1":
            val = dirichlet_norm_closed_k1(f, p)
        else:
            val = dirichlet_norm_quad(f, p, spec)
        return EXIT_OK, {"command": "norm", "method": val.method,
                         "norm_sq": val.norm_sq, "point_term": val.point_term,
                         "field_term": val.field_term,
                         "params": _params_doc(job)}
    if job.command == "qnorm":
        f = quaternion_series(_series_payload(job.f))
        p = build_params(job)
        frame = build_frame(job.frame)
        if job.g is not None:
            g = quaternion_series(_series_payload(job.g))
            value = qdirichlet_inner_product(f, g, p, frame, spec)
            return EXIT_OK, {"command": "qnorm",
                             "inner_product": list(value.components),
                             "params": _params_doc(job)}
        if job.method == "series":
            ci = coefficient_integrals(p, max(f.degree, 0), spec)
            val = qdirichlet_norm_series(f, p, frame, ci)
        else:
            val = qdirichlet_norm(f, p, frame, spec,
                                  method=job.method if job.method in ("quad", "closed-k1") else "quad")
        return EXIT_OK, {"command": "qnorm", "method": val.method,
                         "norm_sq": val.norm_sq,
                         "split_parts": list(val.split_parts),
                         "params": _params_doc(job)}
    if job.command == "kernel":
        p = build_params(job)
        value = kernel_K_half(parse_point(job.z), parse_point(job.zeta), p, spec)
        return EXIT_OK, {"command": "kernel",
                         "z": _complex_pair(parse_point(job.z)),
                         "zeta": _complex_pair(parse_point(job.zeta)),
                         "value": _complex_pair(value),
                         "params": _params_doc(job)}
    if job.command == "verify":
        rows, ok = verify_mod.run_suite(job.suite, quaternionic=False)
        return (EXIT_OK if ok else EXIT_TOLERANCE), rows
    if job.command == "qverify":
        rows, ok = verify_mod.run_suite(job.suite, quaternionic=True)
        return (EXIT_OK if ok else EXIT_TOLERANCE), rows
    if job.command == "table":
        return _table(job, spec)
    raise DomainError(f"unknown command {job.command!r}")


def _params_doc(job):
    return {"alpha": job.alpha, "beta": job.beta, "sigma": job.sigma,
            "k": encode_k(job.k)}


def _k_sort_key(k):
    return (1, 0.0) if k == INF else (0, float(k))


def table(job, spec=None):
    """Cartesian sweep over (alpha, sigma, k); one row per cell, rows in
    lexicographic parameter order."""
    return _table(job, spec or build_quad_spec(job.quad))[1]


def _table(job, spec):
    f = complex_series(_series_payload(job.f))
    alphas = sorted(job.alphas or [job.alpha])
    sigmas = sorted(job.sigmas or [job.sigma])
    ks = sorted(job.ks or [job.k], key=_k_sort_key)
    rows = []
    code = EXIT_OK
    for alpha in alphas:
        for sigma in sigmas:
            for k in ks:
                p = FFParams(alpha=alpha, sigma=sigma, k=k, beta=job.beta)
                row = {"alpha": alpha, "sigma": sigma, "k": encode_k(k)}
                try:
                    if job.method == "closed-k1":
                        val = dirichlet_norm_closed_k1(f, p)
                    elif job.method == "series":
                        ci = coefficient_integrals(p, max(f.degree, 0), spec)
                        val = dirichlet_norm_series(f, p, ci)
                    else:
                        val = dirichlet_norm_quad(f, p, spec)
                    row.update(norm_sq=val.norm_sq, point_term=val.point_term,
                               field_term=val.field_term, method=val.method,
                               status="ok")
                except NoConvergence:
                    row.update(norm_sq="", point_term="", field_term="",
                               method=job.method, status="divergent")
                rows.append(row)
    return code, rows


def _render_csv(rows):
    if not rows:
        return ""
    header = list(dict.fromkeys(key for row in rows for key in row))
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for key in header:
            v = row.get(key, "")
            if isinstance(v, bool):
                cells.append(str(v).lower())
            elif isinstance(v, float):
                cells.append(fmt_float(v))
            elif isinstance(v, (list, tuple)):
                cells.append('"' + canonical_dumps(list(v)) + '"')
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _sanitize(doc):
    if isinstance(doc, dict):
        return {k: _sanitize(v) for k, v in doc.items()}
    if isinstance(doc, (list, tuple)):
        return [_sanitize(v) for v in doc]
    if isinstance(doc, (np.floating,)):
        return float(doc)
    if isinstance(doc, (np.integer,)):
        return int(doc)
    if isinstance(doc, np.bool_):
        return bool(doc)
    return doc


def _emit(doc, job):
    doc = _sanitize(doc)
    if job.format == "csv":
        rows = doc if isinstance(doc, list) else [doc]
        flat = []
        for row in rows:
            flat.append({k: (canonical_dumps(v) if isinstance(v, (dict, list))
                             else v) for k, v in row.items()})
        text = _render_csv(flat)
    else:
        text = canonical_dumps(doc) + "\n"
    if job.out:
        with open(job.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error_record(kind, exc, **extra):
    record = {"error": {"type": kind, "message": str(exc), **extra}}
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")


def _add_common(sub):
    sub.add_argument("--f", help="series coefficients, JSON or @file")
    sub.add_argument("--g", help="second series, JSON or @file")
    sub.add_argument("--alpha", type=float, default=None)
    sub.add_argument("--beta", type=float, default=None)
    sub.add_argument("--sigma", type=float, default=None)
    sub.add_argument("--k", default=None, help="non-negative integer or 'inf'")
    sub.add_argument("--frame", help="two quaternions as JSON [[..4],[..4]]")
    sub.add_argument("--z", help="complex point as JSON [re, im]")
    sub.add_argument("--zeta", help="complex point as JSON [re, im]")
    sub.add_argument("--t", type=float, default=None, help="real-line point")
    sub.add_argument("--real-f", dest="real_f", default=None,
                     help="built-in real function: poly, exp, sin-offset")
    sub.add_argument("--method", default=None)
    sub.add_argument("--suite", default=None)
    sub.add_argument("--alphas", help="JSON list for table sweeps")
    sub.add_argument("--sigmas", help="JSON list for table sweeps")
    sub.add_argument("--ks", help="JSON list for table sweeps")
    sub.add_argument("--quad-nr", type=int, dest="quad_nr", default=None)
    sub.add_argument("--quad-ntheta", type=int, dest="quad_ntheta", default=None)
    sub.add_argument("--quad-panels-r", type=int, dest="quad_panels_r", default=None)
    sub.add_argument("--quad-panels-theta", type=int, dest="quad_panels_theta",
                     default=None)
    sub.add_argument("--rel-tol", type=float, dest="rel_tol", default=None)
    sub.add_argument("--abs-tol", type=float, dest="abs_tol", default=None)
    sub.add_argument("--max-refine", type=int, dest="max_refine", default=None)
    sub.add_argument("--out", default=None)
    sub.add_argument("--format", choices=("json", "csv"), default=None)
    sub.add_argument("--job", help="full JobSpec as JSON or @file (overrides flags)")


COMMANDS = ("deriv", "norm", "qnorm", "qderiv", "kernel", "verify", "qverify",
            "table")

_DEFAULTS = {"alpha": 1.0, "beta": 1.0, "sigma": 0.5, "k": 1,
             "method": "quad", "suite": "all", "format": "json"}


def _config_defaults():
    path = os.environ.get("FFQ_CONFIG")
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def build_job(args):
    if args.job:
        return JobSpec.from_json(
            open(args.job[1:]).read() if args.job.startswith("@") else args.job)
    cfg = _config_defaults()

    def pick(name, parse=None):
        value = getattr(args, name, None)
        if value is None:
            value = cfg.get(name, _DEFAULTS.get(name))
        if value is not None and parse is not None and isinstance(value, str):
            value = parse(value)
        return value

    quad = {}
    for flag, field in (("quad_nr", "nr"), ("quad_ntheta", "ntheta"),
                        ("quad_panels_r", "panels_r"),
                        ("quad_panels_theta", "panels_theta"),
                        ("rel_tol", "rel_tol"), ("abs_tol", "abs_tol"),
                        ("max_refine", "max_refine")):
        value = getattr(args, flag, None)
        if value is None:
            value = cfg.get(flag)
        if value is not None:
            quad[field] = value
    return JobSpec(
        command=args.command,
        f=_read_json_arg(args.f) if args.f else cfg.get("f"),
        g=_read_json_arg(args.g) if args.g else cfg.get("g"),
        alpha=pick("alpha"),
        beta=pick("beta"),
        sigma=pick("sigma"),
        k=decode_k(pick("k")),
        frame=_read_json_arg(args.frame) if args.frame else cfg.get("frame"),
        z=_read_json_arg(args.z) if args.z else cfg.get("z"),
        zeta=_read_json_arg(args.zeta) if args.zeta else cfg.get("zeta"),
        t=pick("t"),
        real_f=pick("real_f"),
        method=pick("method"),
        suite=pick("suite"),
        alphas=_read_json_arg(args.alphas) if args.alphas else cfg.get("alphas"),
        sigmas=_read_json_arg(args.sigmas) if args.sigmas else cfg.get("sigmas"),
        ks=[decode_k(k) for k in _read_json_arg(args.ks)] if args.ks
        else cfg.get("ks"),
        quad=quad or None,
        out=pick("out"),
        format=pick("format"),
    )


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="ffq",
        description="Fractal-fractional derivatives and Dirichlet-type norms "
                    "for holomorphic and slice-regular series.")
    subs = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        _add_common(subs.add_parser(name))
    args = parser.parse_args(argv)
    try:
        job = build_job(args)
    except json.JSONDecodeError as exc:
        _error_record("parse", exc, position=exc.pos, line=exc.lineno,
                      column=exc.colno)
        return EXIT_PARSE
    except OSError as exc:
        _error_record("parse", exc)
        return EXIT_PARSE
    try:
        code, doc = run(job)
        _emit(doc, job)
        return code
    except NoConvergence as exc:
        _error_record("no_convergence", exc,
                      value=repr(exc.value), change=exc.error)
        return EXIT_TOLERANCE
    except (DomainError, FFQError, ZeroDivisionError) as exc:
        _error_record("domain", exc)
        return EXIT_DOMAIN
    except (TypeError, KeyError, ValueError) as exc:
        _error_record("parse", exc)
        return EXIT_PARSE


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
