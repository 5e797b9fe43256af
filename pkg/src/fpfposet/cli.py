"""
``fpf`` command line front end.

Exit status: 0 success, 1 a verified property was falsified, 2 usage error,
3 a resource cap was hit.  Flags take precedence over ``FPF_*`` environment
variables, which take precedence over built-in defaults.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass, field

from .config import Caps
from .errors import FpfError, InvariantError, ResourceLimitError, VerificationError
from .export import dumps, edges_csv, enumeration_csv, export_hasse, poset_to_dict
from .involution import enumerate_fpf, format_brackets, length, maximum, minimum, parse
from .poset import format_poly, mobius, q_double_factorial, rank_genfun

log = logging.getLogger("fpfposet")

COMMANDS = ("enumerate", "hasse", "rises", "verify-el", "shelling", "compare-ds",
            "genfun", "mobius", "topology", "interval")
FORMATS = ("json", "dot", "csv", "text")
DEFAULT_FORMAT = {"hasse": "dot", "interval": "dot", "enumerate": "csv"}
ALLOWED_FORMATS = {
    "enumerate": {"csv", "json", "text"},
    "hasse": {"dot", "json", "csv"},
    "interval": {"dot", "json", "csv"},
    "rises": {"csv", "json", "text"},
    "verify-el": {"json", "text"},
    "shelling": {"json", "csv", "text"},
    "compare-ds": {"json", "dot", "text"},
    "genfun": {"json", "text"},
    "mobius": {"json", "text"},
    "topology": {"json", "text"},
}

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n: int
    command: str
    output_format: str
    direction: str = "reversed"
    caps: Caps = field(default_factory=Caps)
    output_path: str | None = None
    workers: int = 1
    poset: str = "bruhat"
    labeled: bool = True
    elements: tuple[str, ...] = ()

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n < 1:
            raise UsageError("--n must be at least 1")
        if self.output_format not in ALLOWED_FORMATS[self.command]:
            raise UsageError(f"{self.command} does not support --format {self.output_format}; "
                             f"choose from {sorted(ALLOWED_FORMATS[self.command])}")
        if self.direction not in ("standard", "reversed", "both"):
            raise UsageError(f"bad --direction {self.direction!r}")
        if self.direction == "both" and self.command != "verify-el":
            raise UsageError("--direction both only applies to verify-el")
        if self.workers < 1:
            raise UsageError("--workers must be positive")
        if self.command == "interval" and len(self.elements) != 2:
            raise UsageError("interval needs two elements: LOWER UPPER")
        if self.command == "mobius" and len(self.elements) not in (0, 2):
            raise UsageError("mobius takes either no elements or LOWER UPPER")
        if self.command == "rises" and len(self.elements) > 1:
            raise UsageError("rises takes at most one element")


def _env(name, default, cast=str):
    raw = os.environ.get("FPF_" + name)
    return default if raw in (None, "") else cast(raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fpf", description=__doc__.strip().splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int)
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--direction", choices=("standard", "reversed", "both"))
        p.add_argument("--workers", type=int)
        p.add_argument("--out")
        p.add_argument("--enumeration-cap", type=int)
        p.add_argument("--chain-cap", type=int)
        p.add_argument("--ridge-mem-cap", type=int)
        if name in ("hasse", "interval"):
            p.add_argument("--poset", choices=("bruhat", "ds"))
            p.add_argument("--unlabeled", action="store_true")
        if name in ("interval", "mobius", "rises"):
            p.add_argument("elements", nargs="*", metavar="ELEMENT",
                           help='cycle form "(1,6)(2,5)(3,4)" or bracket form "1-6,2-5,3-4"')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    def pick(flag, env_name, default, cast=str):
        return flag if flag is not None else _env(env_name, default, cast)

    elements = tuple(getattr(args, "elements", ()) or ())
    n = pick(args.n, "N", None, int)
    if n is None and elements:
        n = parse(elements[0]).n
    if n is None:
        raise UsageError("--n is required (or FPF_N)")
    env_caps = Caps.from_env()
    caps = Caps(
        enumeration_cap=pick(args.enumeration_cap, "ENUMERATION_CAP", env_caps.enumeration_cap, int),
        chain_cap=pick(args.chain_cap, "CHAIN_CAP", env_caps.chain_cap, int),
        ridge_mem_cap=pick(args.ridge_mem_cap, "RIDGE_MEM_CAP", env_caps.ridge_mem_cap, int),
    )
    cfg = RunConfig(
        n=n,
        command=args.command,
        output_format=pick(args.format, "FORMAT", DEFAULT_FORMAT.get(args.command, "json")),
        direction=pick(args.direction, "DIRECTION", "reversed"),
        caps=caps,
        output_path=pick(args.out, "OUT", None),
        workers=pick(args.workers, "WORKERS", os.cpu_count() or 1, int),
        poset=getattr(args, "poset", None) or "bruhat",
        labeled=not getattr(args, "unlabeled", False),
        elements=elements,
    )
    cfg.validate()
    return cfg


# ---- command bodies: each returns (text, failed) -------------------------------------


def _poset(cfg: RunConfig):
    from .rises import fpf_poset

    return fpf_poset(cfg.n, cfg.caps.enumeration_cap)


def _elements(cfg: RunConfig):
    xs = [parse(s) for s in cfg.elements]
    for x in xs:
        if x.n != cfg.n:
            raise UsageError(f"{x} has n={x.n}, but --n is {cfg.n}")
    return xs


def _render_poset(P, fmt, labeled, name):
    if fmt == "dot":
        return export_hasse(P, labeled=labeled, name=name)
    if fmt == "csv":
        return edges_csv(P)
    return dumps(poset_to_dict(P))


def cmd_enumerate(cfg):
    xs = enumerate_fpf(cfg.n, cfg.caps.enumeration_cap)
    if cfg.output_format == "csv":
        return enumeration_csv(xs), False
    if cfg.output_format == "json":
        return dumps([{"index": k, "cycle": str(x), "brackets": format_brackets(x),
                       "word": list(x.word), "length": length(x)} for k, x in enumerate(xs)]), False
    return "".join(f"{x}\t{length(x)}\n" for x in xs), False


def cmd_hasse(cfg):
    if cfg.poset == "ds":
        from .ds import build_ds_poset

        P = build_ds_poset(cfg.n, cfg.caps.enumeration_cap)
    else:
        P = _poset(cfg)
    return _render_poset(P, cfg.output_format, cfg.labeled, f"F{2 * cfg.n}"), False


def cmd_interval(cfg):
    x, y = _elements(cfg)
    if cfg.poset == "ds":
        from .ds import build_ds_poset

        P = build_ds_poset(cfg.n, cfg.caps.enumeration_cap)
    else:
        P = _poset(cfg)
    Q = P.interval(P.index(x), P.index(y))
    return _render_poset(Q, cfg.output_format, cfg.labeled, "interval"), False


def cmd_rises(cfg):
    from .rises import classify_rises

    xs = _elements(cfg) or enumerate_fpf(cfg.n, cfg.caps.enumeration_cap)
    rows = [(str(x), r) for x in xs for r in classify_rises(x)]
    if cfg.output_format == "json":
        return dumps([{"element": e, "i1": r.i1, "i2": r.i2, "kind": r.kind.value, "free": r.free,
                       "suitable": r.suitable} for e, r in rows]), False
    if cfg.output_format == "csv":
        lines = ["element,i1,i2,kind,free,suitable"]
        lines += [f'"{e}",{r.i1},{r.i2},{r.kind.value},{int(r.free)},{int(r.suitable)}' for e, r in rows]
        return "\n".join(lines) + "\n", False
    tail = {True: "\tsuitable", False: ""}
    return "".join(f"{e}\t({r.i1},{r.i2})\t{r.kind.value}\t{'free' if r.free else '-'}"
                   f"{tail[r.suitable]}\n" for e, r in rows), False


def cmd_verify_el(cfg):
    from .el import verify_el

    P = _poset(cfg)
    directions = ("reversed", "standard") if cfg.direction == "both" else (cfg.direction,)
    reports = {}
    for d in directions:
        rep = verify_el(P, d, cfg.caps.chain_cap, n=cfg.n, workers=cfg.workers)
        log.info("verify-el %s: %d intervals in %.2fs", d, rep.intervals_checked, rep.timing)
        reports[d] = rep
    failed = any(not r.verified for r in reports.values())
    if cfg.output_format == "text":
        text = "".join(f"direction={d} intervals={r.intervals_checked} failures={len(r.failures)} "
                       f"max_interval_length={r.max_interval_length}\n" for d, r in reports.items())
        return text, failed
    if len(reports) == 1:
        return dumps(next(iter(reports.values())).to_dict(timing=False)), failed
    return dumps({d: r.to_dict(timing=False) for d, r in reports.items()}), failed


def cmd_shelling(cfg):
    from .el import label_word, shelling_order

    P = _poset(cfg)
    direction = cfg.direction
    chains = shelling_order(P, direction, cfg.caps.chain_cap)
    rows = [([str(P.elements[i]) for i in c], [f"({a},{b})" for a, b in label_word(P, c)]) for c in chains]
    if cfg.output_format == "json":
        return dumps({"n": cfg.n, "direction": direction, "facets": len(rows),
                      "order": [{"chain": c, "labels": w} for c, w in rows]}), False
    if cfg.output_format == "csv":
        lines = ["position,labels,chain"]
        lines += [f'{k},"{" ".join(w)}","{" < ".join(c)}"' for k, (c, w) in enumerate(rows)]
        return "\n".join(lines) + "\n", False
    return "".join(f"{k}\t{' '.join(w)}\n" for k, (_, w) in enumerate(rows)), False


def cmd_compare_ds(cfg):
    from .ds import build_ds_poset, compare_posets

    F = _poset(cfg)
    DS = build_ds_poset(cfg.n, cfg.caps.enumeration_cap)
    rep = compare_posets(cfg.n, cfg.caps.enumeration_cap, strict=False, F=F, DS=DS)
    failed = not (rep.subposet_holds and rep.rank_function_equal and rep.elements_equal)
    if cfg.output_format == "dot":
        ds_edges = DS.edge_set()
        el = F.elements
        missing = [(i, j) for i, j in F.edges() if (el[i], el[j]) not in ds_edges]
        return export_hasse(F, labeled=True, name=f"F{2 * cfg.n}_vs_DS", highlight=missing), failed
    if cfg.output_format == "text":
        text = (f"n={rep.n} f_edges={rep.f_edges} ds_edges={rep.ds_edges} "
                f"rank_function_equal={rep.rank_function_equal}\n")
        text += "".join(f"F only: {a} -> {b}\n" for a, b in rep.edges_in_f_not_ds)
        text += "".join(f"DS only: {a} -> {b}\n" for a, b in rep.edges_in_ds_not_f)
        return text, failed
    return dumps(rep.to_dict()), failed


def cmd_genfun(cfg):
    P = _poset(cfg)
    got = rank_genfun(P)
    expected = q_double_factorial(cfg.n)
    failed = got != expected
    if cfg.output_format == "text":
        return f"{format_poly(got)}\n", failed
    return dumps({"n": cfg.n, "coefficients": got, "q_double_factorial": expected,
                  "equal": not failed, "polynomial": format_poly(got)}), failed


def cmd_mobius(cfg):
    P = _poset(cfg)
    xs = _elements(cfg) or [minimum(cfg.n), maximum(cfg.n)]
    x, y = xs
    mu = mobius(P, P.index(x), P.index(y))
    if cfg.output_format == "text":
        return f"{mu}\n", False
    return dumps({"lower": str(x), "upper": str(y), "mobius": mu}), False


def cmd_topology(cfg):
    from .el import verify_el
    from .topology import ball_certificate

    P = _poset(cfg)
    el = verify_el(P, "reversed", cfg.caps.chain_cap, n=cfg.n, workers=cfg.workers) if P.height >= 2 else None
    cert = ball_certificate(P, el, cfg.caps.chain_cap, cfg.caps.ridge_mem_cap, n=cfg.n)
    failed = cert.verdict == "fail"
    if cfg.output_format == "text":
        return "".join(f"{k}={v}\n" for k, v in cert.to_dict().items()), failed
    return dumps(cert.to_dict()), failed


HANDLERS = {
    "enumerate": cmd_enumerate, "hasse": cmd_hasse, "rises": cmd_rises, "verify-el": cmd_verify_el,
    "shelling": cmd_shelling, "compare-ds": cmd_compare_ds, "genfun": cmd_genfun,
    "mobius": cmd_mobius, "topology": cmd_topology, "interval": cmd_interval,
}


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    start = time.perf_counter()
    text, failed = HANDLERS[cfg.command](cfg)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    log.info("%s --n %d finished in %.2fs", cfg.command, cfg.n, time.perf_counter() - start)
    return EXIT_FAILED if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except ResourceLimitError as e:
        print(f"fpf: resource cap: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (VerificationError, InvariantError) as e:
        print(f"fpf: verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, FpfError, ValueError) as e:
        print(f"fpf: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
