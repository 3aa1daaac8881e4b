"""Command-line front end.

Subcommands: identities, amplitudes, simulate, sample, qasm, hiddenvars.
Exit code 0 on success, 1 when a verification fails (for example an operator
identity exceeding its tolerance), 2 on usage errors.  All floating-point
output carries 12 significant digits.  ``--output`` writes through a
temporary file and an atomic rename, so readers never see a partial file.
The default sampling seed comes from the QPIGEON_SEED environment variable
when set, else 0.
"""

import argparse
import json
import os
import sys

from . import amplitudes as amp_mod
from . import circuits as circ_mod
from . import hiddenvars as hv_mod
from . import operators as op_mod

SEED_ENV_VAR = "QPIGEON_SEED"

_CIRCUITS = {
    "pi": (circ_mod.pair_check_circuit, circ_mod.PAIR_CHECK_ANCILLA_CBITS),
    "p": (circ_mod.all_same_check_circuit, circ_mod.ALL_SAME_ANCILLA_CBITS),
}


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _round12(obj):
    """Recursively round floats to 12 significant digits for JSON output."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        circ_mod.write_text_atomic(output, text)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise SystemExit(f"error: {SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def _parse_sweep(text: str) -> list[float]:
    """Either a single value or start:stop:steps with both endpoints included."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, stop = float(parts[0]), float(parts[1])
            steps = int(parts[2])
            if steps < 1:
                raise ValueError
            if steps == 1:
                return [start]
            width = (stop - start) / (steps - 1)
            return [start + k * width for k in range(steps)]
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected VALUE or START:STOP:STEPS, got {text!r}")


def _cmd_identities(args) -> int:
    report = op_mod.verify_identities(tolerance=args.tolerance)
    if args.format == "json":
        text = json.dumps(_round12(report.to_dict()), indent=2) + "\n"
    else:
        lines = ["check,max_deviation,passed"]
        for name, dev in report.checks.items():
            lines.append(f"{name},{_fmt(dev)},{str(dev <= report.tolerance).lower()}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if report.passed else 1


def _cmd_amplitudes(args) -> int:
    failed = False
    rows = []
    for et in args.epsilon_t:
        table = amp_mod.amplitude_table(et)
        total = sum(rec.prob_numeric for rec in table)
        if abs(total - 1.0) > 1e-12:
            failed = True
        for rec in table:
            if abs(rec.prob_closed - rec.prob_numeric) > 1e-10:
                failed = True
            rows.append(rec)
    if args.format == "json":
        payload = {
            "phase_convention": amp_mod.PHASE_CONVENTION,
            "records": [
                {
                    "epsilon_t": rec.epsilon_t,
                    "label": str(rec.label),
                    "outcome_class": rec.outcome_class,
                    "prob_closed": rec.prob_closed,
                    "prob_numeric": rec.prob_numeric,
                }
                for rec in rows
            ],
        }
        text = json.dumps(_round12(payload), indent=2) + "\n"
    else:
        lines = ["epsilon_t,label,outcome_class,prob_closed,prob_numeric"]
        for rec in rows:
            lines.append(
                f"{_fmt(rec.epsilon_t)},{rec.label},{rec.outcome_class},"
                f"{_fmt(rec.prob_closed)},{_fmt(rec.prob_numeric)}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 1 if failed else 0


def _build_circuit(name: str):
    builder, ancilla_cbits = _CIRCUITS[name]
    return builder(), ancilla_cbits


def _cmd_simulate(args) -> int:
    circuit, ancilla_cbits = _build_circuit(args.circuit)
    probs = circ_mod.simulate_ideal(circuit)
    failed = abs(sum(probs.values()) - 1.0) > 1e-12
    if args.group:
        expected = circ_mod.grouped_expected(probs, circ_mod.PIGEON_CBITS, ancilla_cbits)
        if args.format == "json":
            payload = {
                "circuit": args.circuit,
                "groups": [
                    {"pigeon_state": pig, "ancilla_pattern": anc, "probability": p}
                    for (pig, anc), p in sorted(expected.items())
                ],
            }
            text = json.dumps(_round12(payload), indent=2) + "\n"
        else:
            lines = ["pigeon_state,ancilla_pattern,probability"]
            for (pig, anc), p in sorted(expected.items()):
                lines.append(f"{pig},{anc},{_fmt(p)}")
            text = "\n".join(lines) + "\n"
    elif args.format == "json":
        payload = {"circuit": args.circuit, "probabilities": probs}
        text = json.dumps(_round12(payload), indent=2) + "\n"
    else:
        lines = ["bitstring,probability"]
        lines += [f"{key},{_fmt(p)}" for key, p in probs.items()]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 1 if failed else 0


def _cmd_sample(args) -> int:
    circuit, ancilla_cbits = _build_circuit(args.circuit)
    noise = None if args.noise_readout is None else circ_mod.NoiseModel(args.noise_readout)
    hist = circ_mod.sample_shots(circuit, shots=args.shots, seed=args.seed, noise=noise)
    if args.group:
        groups = circ_mod.postselect_group(hist, circ_mod.PIGEON_CBITS, ancilla_cbits)
        expected = circ_mod.grouped_expected(
            circ_mod.simulate_ideal(circuit), circ_mod.PIGEON_CBITS, ancilla_cbits
        )
        if args.format == "json":
            payload = {
                "shots": hist.shots,
                "seed": hist.seed,
                "noise": None if noise is None else {"readout_flip_prob": noise.readout_flip_prob},
                "groups": [
                    {
                        "pigeon_state": g.pigeon_pattern,
                        "ancilla_counts": g.ancilla_counts,
                        "total": g.total,
                    }
                    for g in groups
                ],
            }
            text = json.dumps(_round12(payload), indent=2) + "\n"
        else:
            text = circ_mod.grouped_csv(groups, expected)
    elif args.format == "json":
        text = circ_mod.histogram_json(hist)
    else:
        text = circ_mod.histogram_csv(hist)
    _emit(text, args.output)
    return 0


def _cmd_qasm(args) -> int:
    circuit, _ = _build_circuit(args.circuit)
    _emit(circ_mod.export_qasm(circuit), args.output)
    return 0


def _cmd_hiddenvars(args) -> int:
    report = hv_mod.enumeration_report()
    if args.format == "json":
        text = json.dumps(_round12(report), indent=2) + "\n"
    else:
        lines = ["v01,v12,v02,v_all," + ",".join(hv_mod.CONSTRAINT_NAMES) + ",valid"]
        for cand in report["candidates"]:
            flags = ",".join(str(cand["constraints"][name]).lower() for name in hv_mod.CONSTRAINT_NAMES)
            lines.append(
                f"{cand['v01']},{cand['v12']},{cand['v02']},{cand['v_all']},"
                f"{flags},{str(cand['valid']).lower()}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    failed = report["violation_exists"] or not report["classical_placements_match_valid_set"]
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpigeon",
        description="Exact tools for the three-pigeon, two-box pre/post-selection experiment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("csv", "json"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", default=None, help="write here atomically instead of stdout")

    p = sub.add_parser("identities", help="verify the projector algebra and report deviations")
    p.add_argument("--tolerance", type=float, default=1e-12)
    add_common(p)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("amplitudes", help="transition probabilities for all eight readout labels")
    p.add_argument(
        "--epsilon-t",
        type=_parse_sweep,
        required=True,
        metavar="VALUE|START:STOP:STEPS",
        help="coupling value, or an inclusive sweep",
    )
    add_common(p, default="csv")
    p.set_defaults(func=_cmd_amplitudes)

    p = sub.add_parser("simulate", help="exact outcome distribution of a built-in circuit")
    p.add_argument("--circuit", choices=sorted(_CIRCUITS), required=True)
    p.add_argument("--group", action="store_true", help="group by pigeon bits and ancilla pattern")
    add_common(p, default="csv")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sample", help="reproducible shot histogram of a built-in circuit")
    p.add_argument("--circuit", choices=sorted(_CIRCUITS), required=True)
    p.add_argument("--shots", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help=f"default from {SEED_ENV_VAR}, else 0")
    p.add_argument("--noise-readout", type=float, default=None, metavar="PROB",
                   help="flip each measured bit with this probability")
    p.add_argument("--group", action="store_true", help="group by pigeon bits and ancilla pattern")
    add_common(p)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("qasm", help="OpenQASM 2.0 text of a built-in circuit")
    p.add_argument("--circuit", choices=sorted(_CIRCUITS), required=True)
    p.add_argument("--output", default=None, help="write here atomically instead of stdout")
    p.set_defaults(func=_cmd_qasm)

    p = sub.add_parser("hiddenvars", help="enumerate classical value assignments")
    add_common(p)
    p.set_defaults(func=_cmd_hiddenvars)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "sample":
        args.seed = _default_seed()
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
