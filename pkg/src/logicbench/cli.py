"""Author and operator command line.

    logicbench validate <files...>
    logicbench solve <sat|mlsat|horn|bisim|table> <input>
    logicbench grade <exercise.json> <events.jsonl>
    logicbench usage <access.jsonl>
    logicbench serve [--host] [--port] [--data-dir] [--exercises] [--static]

Exit codes: 0 success, 1 domain failure (invalid exercise, rejected run),
2 usage/IO errors.  ``--json`` switches reports to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import jsonio
from .errors import ParseError, SchemaError
from .exercises.codec import encode_session, load_exercise
from .exercises.model import ExerciseSpec
from .exercises.session import start_session, submit, reveal_next
from .exercises.validate import validate_exercise
from .fixtures import builtin_exercises
from .formulas.normal_forms import NormalFormKind, check_normal_form
from .formulas.parser import parse
from .formulas.printer import render
from .reasoning.bisim import max_bisimulation
from .reasoning.horn import horn_mark
from .reasoning.modal import ml_satisfiable
from .reasoning.sat import pl_satisfiable
from .semantics.tables import build_truth_table
from .service.analytics import compute_usage


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="logicbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check exercise files")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("solve", help="run a reference solver")
    p.add_argument("kind", choices=["sat", "mlsat", "horn", "bisim", "table"])
    p.add_argument("input", help="formula text, a file path, or JSON for bisim")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("grade", help="replay a recorded submission log")
    p.add_argument("exercise")
    p.add_argument("submissions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_grade)

    p = sub.add_parser("usage", help="sessions per day from an access log")
    p.add_argument("log")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_usage)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default=os.environ.get("LOGICBENCH_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(os.environ.get("LOGICBENCH_PORT", "8000")))
    p.add_argument("--data-dir", default=os.environ.get("LOGICBENCH_DATA_DIR", "./data"))
    p.add_argument("--exercises", default=os.environ.get("LOGICBENCH_EXERCISES"))
    p.add_argument("--static", default=os.environ.get("LOGICBENCH_STATIC"))
    p.set_defaults(handler=cmd_serve)

    return parser


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        raise SystemExit(2)


def _load_exercise_file(path: str) -> ExerciseSpec:
    text = _read_text(path)
    try:
        return load_exercise(json.loads(text))
    except (json.JSONDecodeError, SchemaError) as e:
        print(f"error: {path}: {e}", file=sys.stderr)
        raise SystemExit(2)


def load_exercise_dir(path) -> dict[str, ExerciseSpec]:
    """All *.json exercise files in ``path``, keyed by exercise id."""
    specs = {}
    for file in sorted(Path(path).glob("*.json")):
        spec = load_exercise(json.loads(file.read_text(encoding="utf-8")))
        specs[spec.id] = spec
    return specs


# ---- validate -----------------------------------------------------------------


def cmd_validate(args) -> int:
    failed = False
    report = []
    for path in args.files:
        spec = _load_exercise_file(path)
        issues = validate_exercise(spec)
        report.append(
            {"file": path, "ok": not issues, "errors": [str(i) for i in issues]}
        )
        if issues:
            failed = True
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for entry in report:
            if entry["ok"]:
                print(f"{entry['file']}: ok")
            else:
                print(f"{entry['file']}: INVALID")
                for message in entry["errors"]:
                    print(f"  - {message}")
    return 1 if failed else 0


# ---- solve ---------------------------------------------------------------------


def _solver_input(raw: str) -> str:
    if Path(raw).is_file():
        return Path(raw).read_text(encoding="utf-8").strip()
    return raw


def cmd_solve(args) -> int:
    text = _solver_input(args.input)
    try:
        result = _solve(args.kind, text)
    except (ParseError, SchemaError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        for line in result["report"]:
            print(line)
    return 0


def _solve(kind: str, text: str) -> dict:
    if kind == "sat":
        f = parse(text, "PL")
        r = pl_satisfiable(f)
        out = {"status": r.status, "report": [r.status]}
        if r.satisfiable:
            out["witness"] = jsonio.encode_valuation(r.witness)
            out["report"].append("witness: " + json.dumps(out["witness"], sort_keys=True))
        return out
    if kind == "mlsat":
        f = parse(text, "ML")
        r = ml_satisfiable(f)
        out = {"status": r.status, "report": [r.status]}
        if r.satisfiable:
            out["witness"] = jsonio.encode_kripke(r.witness)
            out["report"].append("witness: " + json.dumps(out["witness"], sort_keys=True))
        return out
    if kind == "horn":
        f = parse(text, "PL")
        if not check_normal_form(f, NormalFormKind.IMPLICATION_FORM):
            raise ValueError("the formula is not in implication form")
        r = horn_mark(f)
        marks = ", ".join(sorted(r.marked)) or "(none)"
        return {
            "status": r.status,
            "marked": sorted(r.marked),
            "order": [[v, i] for v, i in r.order],
            "report": [f"marks: {marks}", r.status],
        }
    if kind == "bisim":
        doc = json.loads(text)
        k1 = jsonio.decode_kripke(doc["k1"], "k1")
        k2 = jsonio.decode_kripke(doc["k2"], "k2")
        relation = sorted(max_bisimulation(k1, k2))
        return {
            "relation": [[a, b] for a, b in relation],
            "report": ["maximal bisimulation:"]
            + [f"  ({a}, {b})" for a, b in relation],
        }
    if kind == "table":
        f = parse(text, "PL")
        table = build_truth_table(f)
        header = list(table.atoms) + [render(c) for c in table.columns]
        lines = ["\t".join(header)]
        for index, row in enumerate(table.rows):
            bits = [
                str((index >> (len(table.atoms) - 1 - i)) & 1)
                for i in range(len(table.atoms))
            ]
            lines.append("\t".join(bits + ["1" if v else "0" for v in row]))
        return {"table": jsonio.encode_truth_table(table), "report": lines}
    raise ValueError(f"unknown solver {kind!r}")


# ---- grade ---------------------------------------------------------------------


def _iter_events(path: str):
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, json.loads(line)
        except json.JSONDecodeError as e:
            print(f"error: {path}:{lineno}: {e}", file=sys.stderr)
            raise SystemExit(2)


def cmd_grade(args) -> int:
    spec = _load_exercise_file(args.exercise)
    issues = validate_exercise(spec)
    if issues:
        for issue in issues:
            print(f"invalid exercise: {issue}", file=sys.stderr)
        return 1
    session = start_session(spec, "grading")
    transcript = []
    for lineno, event in _iter_events(args.submissions):
        etype = event.get("type")
        if etype == "create":
            continue
        if etype == "reveal":
            item = reveal_next(session)
            transcript.append(
                {
                    "line": lineno,
                    "event": "reveal",
                    "item": jsonio.encode_feedback_item(item) if item else None,
                }
            )
            continue
        if etype != "submit":
            print(f"error: {args.submissions}:{lineno}: unknown event {etype!r}",
                  file=sys.stderr)
            return 2
        payload = event.get("payload") or {}
        try:
            if payload.get("step") is not None:
                answer = jsonio.decode_step(payload["step"], "step")
            elif payload.get("answer") is not None:
                answer = jsonio.decode_task_value(payload["answer"], "answer")
            else:
                answer = None
            task = session.current_task
            items, transition = submit(session, answer)
        except SchemaError as e:
            print(f"error: {args.submissions}:{lineno}: {e}", file=sys.stderr)
            return 2
        except Exception as e:
            print(f"error: {args.submissions}:{lineno}: {e}", file=sys.stderr)
            return 1
        accepted = not any(i.severity == "error" for i in items)
        transcript.append(
            {
                "line": lineno,
                "event": "submit",
                "task": task,
                "accepted": accepted,
                "transition": {"kind": transition.kind, "task": transition.task},
                "items": [jsonio.encode_feedback_item(i) for i in items],
            }
        )
    final = {
        "status": session.status,
        "current_task": session.current_task,
        "session": encode_session(session),
    }
    if args.json:
        print(json.dumps({"transcript": transcript, "final": final}, indent=2, sort_keys=True))
    else:
        for entry in transcript:
            if entry["event"] == "reveal":
                print(f"line {entry['line']}: reveal")
                continue
            verdict = "accepted" if entry["accepted"] else "rejected"
            tr = entry["transition"]
            where = tr["task"] or ("finished" if tr["kind"] == "finish" else "stays")
            print(f"line {entry['line']}: [{entry['task']}] {verdict} -> {tr['kind']} {where}")
        print(f"final status: {final['status']}")
    return 0


# ---- usage ---------------------------------------------------------------------


def cmd_usage(args) -> int:
    entries = []
    for lineno, event in _iter_events(args.log):
        if "client" not in event or "ts" not in event:
            print(f"error: {args.log}:{lineno}: need client and ts fields", file=sys.stderr)
            return 2
        entries.append((str(event["client"]), float(event["ts"])))
    report = compute_usage(entries)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for day, count in report.items():
            print(f"{day}\t{count}")
    return 0


# ---- serve ---------------------------------------------------------------------


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    if args.exercises:
        exercises = load_exercise_dir(args.exercises)
    else:
        exercises = builtin_exercises()
    app = create_app(exercises, args.data_dir, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
