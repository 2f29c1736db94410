"""Command-line front end: ``declat <command> [--input PATH | --inline JSON]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .corpus import CORPORA, build_corpus
from .decomp_lattice import build_lattice, lattice_to_json
from .dot import hasse_dot
from .errors import DeclatError, NotALatticeError, ParseError, PreconditionError, ResourceError
from .instances import load_instance, load_lattice, to_family
from .irreducibles import irreducible_report
from .lattice import FiniteLattice
from .lattice_props import property_report
from .report import Suite, check_instance, check_lattice
from .set_family import check_axioms
from .tolerance import blocks_to_json, factor_lattice, skeleton_tolerance

log = logging.getLogger("declat")

COMMANDS = ("validate", "lattice", "irreducibles", "props", "tolerance", "verify-paper")
MANDATED = ("semimodular", "strong", "dually_strong", "consistent", "balanced", "korp")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    inline: str | None = None
    output_format: str | None = None
    caps: Caps = DEFAULT_CAPS
    seed: int = 7
    corpus: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        for f in ("max_n", "max_lattice"):
            if getattr(self.caps, f) <= 0:
                raise ValueError(f"cap {f} must be positive")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def read_document(cfg: RunConfig):
    if cfg.inline is not None:
        text = cfg.inline
    elif cfg.input is not None:
        try:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ParseError(f"cannot read input: {e.strerror}", cfg.input) from e
    else:
        raise ParseError("no input given (use --input or --inline)")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from e


def _load_structure(cfg: RunConfig):
    """An Instance, or a FiniteLattice for ``"type": "lattice"`` documents."""
    doc = read_document(cfg)
    if isinstance(doc, dict) and doc.get("type") == "lattice":
        return load_lattice(doc)
    return load_instance(doc)


def _lattice_of(cfg: RunConfig, obj) -> FiniteLattice:
    if isinstance(obj, FiniteLattice):
        return obj
    return build_lattice(to_family(obj, cfg.caps), cfg.caps).lattice


def cmd_validate(cfg: RunConfig) -> tuple[str, int]:
    inst = load_instance(read_document(cfg))
    rep = check_axioms(to_family(inst, cfg.caps))
    return _dump({"schema": "declat/1", **rep.to_json()}), EXIT_OK if rep.is_interval_system else EXIT_FAIL


def cmd_lattice(cfg: RunConfig) -> tuple[str, int]:
    obj = _load_structure(cfg)
    if isinstance(obj, FiniteLattice):
        L = obj
        doc = {"schema": "declat/1", "type": "lattice", "labels": L.labels,
               "covers": [list(c) for c in L.covers], "bottom": L.bottom, "top": L.top}
    else:
        D = build_lattice(to_family(obj, cfg.caps), cfg.caps)
        L, doc = D.lattice, lattice_to_json(D)
    if cfg.output_format == "dot":
        return hasse_dot(L), EXIT_OK
    return _dump(doc), EXIT_OK


def cmd_irreducibles(cfg: RunConfig) -> tuple[str, int]:
    inst = load_instance(read_document(cfg))
    D = build_lattice(to_family(inst, cfg.caps), cfg.caps)
    return _dump(irreducible_report(D, cfg.caps).to_json(D.lattice)), EXIT_OK


def cmd_props(cfg: RunConfig) -> tuple[str, int]:
    obj = _load_structure(cfg)
    L = _lattice_of(cfg, obj)
    rep = property_report(L, cfg.caps)
    doc = rep.to_json(L)
    mandated = isinstance(obj, FiniteLattice) or check_axioms(to_family(obj, cfg.caps)).is_interval_system
    doc["interval_system"] = not isinstance(obj, FiniteLattice) and mandated
    ok = not mandated or all(rep.flags[p] for p in MANDATED)
    return _dump(doc), EXIT_OK if ok else EXIT_FAIL


def cmd_tolerance(cfg: RunConfig) -> tuple[str, int]:
    L = _lattice_of(cfg, _load_structure(cfg))
    T = skeleton_tolerance(L)
    Q = factor_lattice(T, cfg.caps)
    if cfg.output_format == "dot":
        return hasse_dot(Q, "factor"), EXIT_OK
    doc = {"schema": "declat/1", "blocks": blocks_to_json(T, cfg.caps),
           "factor": {"labels": Q.labels, "covers": [list(c) for c in Q.covers]}}
    return _dump(doc), EXIT_OK


def cmd_verify_paper(cfg: RunConfig) -> tuple[str, int]:
    suite = Suite()
    if cfg.corpus is not None:
        instances = build_corpus(cfg.corpus, cfg.seed)
        header = f"corpus={cfg.corpus} seed={cfg.seed} instances={len(instances)}"
        for inst in instances:
            log.debug("checking %s", inst.name)
            check_instance(suite, inst, cfg.caps)
    else:
        obj = _load_structure(cfg)
        if isinstance(obj, FiniteLattice):
            header = f"lattice size={obj.size}"
            check_lattice(suite, "lattice", obj, cfg.caps)
        else:
            header = f"instance={obj.name or obj.kind}"
            check_instance(suite, obj, cfg.caps)
    code = EXIT_OK if suite.passed else EXIT_FAIL
    if cfg.output_format == "json":
        return _dump({**suite.to_json(), "run": header}), code
    lines = [f"declat/1 verify-paper {header}"] + suite.lines()
    lines.append("ALL CHECKS PASSED" if suite.passed else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n", code


HANDLERS = {
    "validate": cmd_validate,
    "lattice": cmd_lattice,
    "irreducibles": cmd_irreducibles,
    "props": cmd_props,
    "tolerance": cmd_tolerance,
    "verify-paper": cmd_verify_paper,
}


def run(cfg: RunConfig) -> tuple[str, int]:
    """Execute a command; returns (stdout payload, exit code)."""
    try:
        return HANDLERS[cfg.command](cfg)
    except ParseError as e:
        return _error("parse", e.message, e.location), EXIT_INPUT
    except ResourceError as e:
        return _error("resource", str(e), e.cap_name), EXIT_CAP
    except (PreconditionError, NotALatticeError) as e:
        return _error("validation", str(e)), EXIT_FAIL
    except DeclatError as e:
        return _error("input", str(e)), EXIT_INPUT


def _error(kind: str, message: str, location: str | None = None) -> str:
    err = {"kind": kind, "message": message}
    if location is not None:
        err["location"] = location
    return _dump({"schema": "declat/1", "error": err})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="declat", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=name != "verify-paper")
        src.add_argument("--input", metavar="PATH")
        src.add_argument("--inline", metavar="JSON")
        if name == "verify-paper":
            src.add_argument("--corpus", choices=CORPORA)
        p.add_argument("--format", dest="output_format", choices=("json", "dot", "text"), default=None)
        p.add_argument("--cap-lattice", type=int, default=None)
        p.add_argument("--cap-n", type=int, default=None)
        p.add_argument("--seed", type=int, default=7)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        caps = DEFAULT_CAPS.with_overrides(max_lattice=args.cap_lattice, max_n=args.cap_n)
        cfg = RunConfig(args.command, args.input, args.inline, args.output_format, caps, args.seed,
                        getattr(args, "corpus", None))
    except ValueError as e:
        sys.stdout.write(_error("input", str(e)))
        return EXIT_INPUT
    if cfg.command == "verify-paper" and cfg.corpus is None and cfg.input is None and cfg.inline is None:
        cfg = RunConfig(cfg.command, None, None, cfg.output_format, cfg.caps, cfg.seed, "all")
    out, code = run(cfg)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
