"""Command-line driver: ``krasner <command> ...``.

Exit status: 0 when the command ran and every checked property held, 1 when it
ran but found property violations (reported), 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import constructions as C
from . import ideals as I
from .document import digest, dump, load, serialize
from .errors import ConsistencyError, KrasnerError
from .fuzzy import MODES, format_grade, grade
from .hyperstructure import DEFAULT_BUDGET, check_budget, validate_structure
from .search import POLICIES, PREDICATES, SearchSpace, enumerate_structures, find_witness

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    command: str
    args: dict
    digest: object = None
    verdicts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    status: int = EXIT_OK

    def canonical(self) -> dict:
        return {"command": self.command, "args": self.args, "digest": self.digest,
                "verdicts": self.verdicts, "witnesses": self.witnesses, "status": self.status}

    def to_json(self) -> str:
        return json.dumps({"report": self.canonical(), "timings": self.timings},
                          indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"krasner {self.command}"]
        if self.digest:
            digests = self.digest if isinstance(self.digest, list) else [self.digest]
            lines.append("structure sha256: " + ", ".join(d[:16] for d in digests))
        lines.extend(_render(self.verdicts))
        for w in self.witnesses:
            lines.append("witness: " + json.dumps(w, sort_keys=True, ensure_ascii=False))
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"


def _fmt_set(labels) -> str:
    return "{" + ",".join(labels) + "}"


def _render(verdicts: dict) -> list:
    out = []
    for key, value in verdicts.items():
        if key == "table":
            out.append(f"{'ideal':<28} {'prime':<6} {'maximal':<8} {'primary':<8} radical")
            for row in value:
                out.append(f"{_fmt_set(row['ideal']):<28} {row['prime']:<6} {row['maximal']:<8} "
                           f"{row['primary']:<8} {_fmt_set(row['radical'])}")
        elif key == "axioms":
            for name, ok in value.items():
                out.append(f"  {name:<16} {'pass' if ok else 'FAIL'}")
        elif isinstance(value, list) and value and isinstance(value[0], list):
            out.append(f"{key}:")
            out.extend("  " + _fmt_set(v) for v in value)
        elif isinstance(value, list):
            out.append(f"{key}: {_fmt_set(value)}")
        else:
            out.append(f"{key}: {value}")
    return out


def _ordered(R, S) -> list:
    S = set(S)
    return [a for a in R.carrier.labels if a in S]


def _parse_set(R, text: str) -> frozenset:
    items = [x.strip() for x in text.strip().strip("{}").split(",") if x.strip()]
    for x in items:
        R.carrier.index(x)
    return frozenset(items)


def _load(path, args):
    R = load(path)
    if getattr(args, "mode", None):
        R = R.with_mode(args.mode)
    check_budget(R, args.budget)
    return R


def _yn(flag) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _emit_structure(R, out_path, report: Report):
    if out_path:
        dump(R, out_path)
        report.verdicts["written"] = out_path
    else:
        report.verdicts["document"] = serialize(R)


# -- commands ---------------------------------------------------------------

def cmd_validate(args, report: Report):
    R = _load(args.file, args)
    report.digest = digest(R)
    rep = validate_structure(R, budget=args.budget)
    report.verdicts["mode"] = rep.mode
    report.verdicts["axioms"] = {v.name: v.ok for v in rep.verdicts}
    report.verdicts["valid"] = rep.ok
    report.witnesses = [v.to_dict() for v in rep.failures()]
    if not rep.ok:
        report.status = EXIT_VIOLATION


def _require_valid(R, report) -> bool:
    rep = validate_structure(R)
    if not rep.ok:
        report.verdicts["valid"] = False
        report.witnesses = [v.to_dict() for v in rep.failures()]
        report.status = EXIT_VIOLATION
        return False
    return True


def cmd_ideals(args, report: Report):
    R = _load(args.file, args)
    report.digest = digest(R)
    if not _require_valid(R, report):
        return
    lat = I.enumerate_ideals(R)
    report.verdicts["count"] = len(lat)
    report.verdicts["ideals"] = [_ordered(R, S) for S in lat.ideals]


def cmd_classify(args, report: Report):
    R = _load(args.file, args)
    report.digest = digest(R)
    if not _require_valid(R, report):
        return
    proper = not args.literal_definitions
    lat = I.enumerate_ideals(R)
    rows = lat.classify(require_proper=proper)
    report.verdicts["require_proper"] = proper
    report.verdicts["table"] = [
        {"ideal": _ordered(R, r.ideal), "prime": _yn(r.is_prime), "maximal": _yn(r.is_maximal),
         "primary": _yn(r.is_primary), "radical": _ordered(R, r.radical)} for r in rows]
    report.verdicts["jacobson_radical"] = _ordered(R, I.jacobson_radical(R, lat))
    violations = []
    for r in rows:
        if r.is_prime and r.is_primary is False:
            violations.append({"theorem": "prime implies primary", "ideal": _ordered(R, r.ideal)})
        # the radical theorem is stated with a scalar identity
        if r.is_primary and R.ep is not None and not I.is_prime(R, r.radical, proper):
            violations.append({"theorem": "radical of a primary ideal is prime",
                               "ideal": _ordered(R, r.ideal)})
    report.verdicts["theorem_checks"] = "pass" if not violations else "FAIL"
    report.witnesses = violations
    if violations:
        report.status = EXIT_VIOLATION


def cmd_radical(args, report: Report):
    R = _load(args.file, args)
    report.digest = digest(R)
    if not _require_valid(R, report):
        return
    J = _parse_set(R, args.ideal)
    proper = not args.literal_definitions
    methods = ["powers", "primes"] if args.method == "both" else [args.method]
    got = {m: I.f_radical(R, J, m, proper) for m in methods}
    report.verdicts["ideal"] = _ordered(R, J)
    for m in methods:
        report.verdicts[m] = _ordered(R, got[m])
    if len(methods) == 2:
        agree = got["powers"] == got["primes"]
        report.verdicts["agreement"] = agree
        if not agree:
            report.status = EXIT_VIOLATION


def cmd_quotient(args, report: Report):
    R = _load(args.file, args)
    report.digest = digest(R)
    if not _require_valid(R, report):
        return
    J = _parse_set(R, args.ideal)
    Q = C.quotient(R, J)
    pi = C.natural_projection(R, J)
    hom = C.check_homomorphism(pi)
    report.verdicts["cosets"] = list(Q.carrier.labels)
    report.verdicts["valid"] = validate_structure(Q).ok
    report.verdicts["projection_is_homomorphism"] = bool(hom)
    report.verdicts["hyperintegral_domain"] = C.is_hyperintegral_f_domain(Q)
    if not hom:
        report.witnesses.append({"projection": hom.reason})
        report.status = EXIT_VIOLATION
    _emit_structure(Q, args.output, report)


def cmd_product(args, report: Report):
    R1, R2 = _load(args.first, args), _load(args.second, args)
    report.digest = [digest(R1), digest(R2)]
    P = C.product(R1, R2, check=False)
    check_budget(P, args.budget)
    rep = validate_structure(P)
    report.verdicts["size"] = P.size
    report.verdicts["valid"] = rep.ok
    report.witnesses = [v.to_dict() for v in rep.failures()]
    if not rep.ok:
        report.status = EXIT_VIOLATION
    _emit_structure(P, args.output, report)


def _parse_map(text: str) -> dict:
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    out = {}
    for part in text.split(","):
        if "=" not in part:
            raise KrasnerError(f"malformed map item {part!r}; expected a=b")
        a, b = part.split("=", 1)
        out[a.strip()] = b.strip()
    return out


def cmd_hom_check(args, report: Report):
    S, T = _load(args.source, args), _load(args.target, args)
    report.digest = [digest(S), digest(T)]
    h = C.Homomorphism.from_mapping(S, T, _parse_map(args.map))
    c = C.check_homomorphism(h)
    report.verdicts["homomorphism"] = bool(c)
    report.verdicts["surjective"] = C.is_surjective(h)
    if not c:
        report.witnesses.append({"reason": c.reason, "args": list(c.witness or ())})
        report.status = EXIT_VIOLATION


def cmd_lift(args, report: Report):
    if args.ring:
        with open(args.ring, encoding="utf-8") as fh:
            data = json.load(fh)
        ring = C.FiniteRing(tuple(data["elements"]), tuple(map(tuple, data["add"])),
                            tuple(map(tuple, data["mul"])), name=data.get("name", "ring"))
    elif args.zmod:
        ring = C.zmod(args.zmod)
    else:
        raise KrasnerError("lift needs --zmod K or --ring FILE")
    R = C.ring_lift(ring, args.m, args.n, grade(args.t1), grade(args.t2), args.mode or "support")
    report.digest = digest(R)
    rep = validate_structure(R)
    report.verdicts["valid"] = rep.ok
    report.verdicts["mode"] = rep.mode
    if not rep.ok:
        report.witnesses = [v.to_dict() for v in rep.failures()]
        report.status = EXIT_VIOLATION
    _emit_structure(R, args.output, report)


def _space(args) -> SearchSpace:
    grid = tuple(grade(x) for x in args.grades.split(","))
    return SearchSpace(args.size, args.m, args.n, grid, args.policy, args.candidates)


def cmd_search(args, report: Report):
    stream = enumerate_structures(_space(args))
    found = list(stream)
    report.verdicts["count"] = len(found)
    report.verdicts["candidates"] = stream.candidates
    report.verdicts["truncated"] = stream.truncated
    report.verdicts["structures"] = [digest(R) for R in found]
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for i, R in enumerate(found):
            dump(R, os.path.join(args.output, f"structure_{i:04d}.json"))


def cmd_witness(args, report: Report):
    source = [_load(p, args) for p in args.files] if args.files else _space(args)
    w = find_witness(source, args.predicate)
    report.verdicts["predicate"] = args.predicate
    report.verdicts["found"] = w.found
    report.verdicts["truncated"] = w.truncated
    report.verdicts["examined"] = w.examined
    if w.found:
        report.digest = digest(w.structure)
        report.verdicts["structure"] = w.structure.name
        report.verdicts["ideal"] = _ordered(w.structure, w.ideal)


COMMANDS = {
    "validate": cmd_validate, "ideals": cmd_ideals, "classify": cmd_classify,
    "radical": cmd_radical, "quotient": cmd_quotient, "product": cmd_product,
    "hom-check": cmd_hom_check, "lift": cmd_lift, "search": cmd_search, "witness": cmd_witness,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the machine-readable report ('-' for stdout)")
    common.add_argument("--mode", choices=MODES, help="override the document's equality mode")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on tuple evaluations")
    common.add_argument("--literal-definitions", action="store_true",
                        help="do not require prime/primary ideals to be proper")

    p = argparse.ArgumentParser(prog="krasner", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    for name in ("validate", "ideals", "classify"):
        add(name).add_argument("file")
    q = add("radical")
    q.add_argument("file")
    q.add_argument("--ideal", required=True, help="comma-separated labels, e.g. 0,4,8")
    q.add_argument("--method", choices=("powers", "primes", "both"), default="both")
    q = add("quotient")
    q.add_argument("file")
    q.add_argument("--ideal", required=True)
    q.add_argument("-o", "--output")
    q = add("product")
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("-o", "--output")
    q = add("hom-check")
    q.add_argument("source")
    q.add_argument("target")
    q.add_argument("--map", required=True, help="JSON file {label: label} or inline a=b,c=d")
    q = add("lift")
    q.add_argument("--zmod", type=int)
    q.add_argument("--ring", help="JSON file with elements/add/mul tables (indices)")
    q.add_argument("--m", type=int, default=2)
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--t1", default="1")
    q.add_argument("--t2", default="1")
    q.add_argument("-o", "--output")
    for name in ("search", "witness"):
        q = add(name)
        q.add_argument("--size", type=int, default=2)
        q.add_argument("--m", type=int, default=2)
        q.add_argument("--n", type=int, default=2)
        q.add_argument("--grades", default="1", help="comma-separated grade grid, e.g. 1,1/2")
        q.add_argument("--policy", choices=POLICIES, default="singleton-only")
        q.add_argument("--candidates", type=int, default=1_000_000, help="candidate budget")
        if name == "search":
            q.add_argument("-o", "--output", help="directory for the found structure documents")
        else:
            q.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
            q.add_argument("files", nargs="*")
    return p


def _echo(args) -> dict:
    skip = {"json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, False)}


def run_command(argv) -> Report:
    args = build_parser().parse_args(argv)
    report = Report(args.command, _echo(args))
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except ConsistencyError as exc:
        report.status = EXIT_VIOLATION
        report.verdicts["error"] = str(exc)
    except (KrasnerError, OSError, KeyError, ValueError) as exc:
        report.status = EXIT_USAGE
        report.verdicts["error"] = f"{type(exc).__name__}: {exc}"
    report.timings["seconds"] = round(time.perf_counter() - start, 6)
    report._args = args
    return report


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report = run_command(argv)
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out_json = report._args.json
    if out_json == "-":
        sys.stdout.write(report.to_json())
    else:
        if out_json:
            with open(out_json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        text = report.to_text()
        (sys.stderr if report.status == EXIT_USAGE else sys.stdout).write(text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
