"""Command line interface of the p-adic Lattice Tool.

Subcommands read an instance file, run one library operation and print a
deterministic report (plain text or JSON).

    padic_lattice orthogonalize FILE [--via-cvp]
    padic_lattice cvp FILE [--verify]
    padic_lattice lvp FILE [--verify]
    padic_lattice invariants FILE [--ladder K] [--plot DIR]
    padic_lattice check [--seed S] [--count N]
    padic_lattice gen --p P --dim N --rank M --seed S --out FILE

Exit codes: 0 success, 2 input error, 3 precondition error, 4 verification
failure or exhausted oracle budget.

Authors
-------
    - Mees Fix
"""

import argparse
import json
import pathlib
import sys

import numpy as np
import pandas as pd
from tqdm import tqdm

from padic_lattice_tool.constants import (
    CHECK_MAX_DIMENSION,
    CHECK_PRIMES,
    CHECK_VALUATION_RANGE,
    DEFAULT_CHECK_COUNT,
    DEFAULT_LADDER_LENGTH,
    EXIT_INPUT_ERROR,
    EXIT_PRECONDITION_ERROR,
    EXIT_SUCCESS,
    EXIT_VERIFICATION_ERROR,
    GROUND_TRUTH_SUFFIX,
    WEIGHT_SPECS,
)
from padic_lattice_tool.errors import (
    InvalidParameterError,
    OracleBudgetError,
    PadicLatticeError,
)
from padic_lattice_tool.instance_parser import instanceFile
from padic_lattice_tool.lattice import (
    frameElimination,
    gen_instance,
    invariant_report,
    is_orthogonal_basis,
    random_vector,
    same_lattice,
    successive_maxima,
)
from padic_lattice_tool.plotting import plot_invariants
from padic_lattice_tool.solvers import (
    cvp_with_frame,
    cvpOrthogonalizer,
    frame_cvp_oracle,
    lvp_with_frame,
    verify_cvp,
    verify_lvp,
)
from padic_lattice_tool.utils import format_norms, format_vector, sha256_digest


class runReport:
    """Output of one command.

    Parameters
    ----------
    command : str
        Command echo

    digest : str or None
        SHA-256 of the canonical instance

    lines : list of str
        Payload in text form

    payload : dict
        Payload in JSON form

    verdict : str or None
        "PASS" or "FAIL" when verification was requested
    """

    def __init__(self, command, digest, lines, payload, verdict=None):
        self.command = command
        self.digest = digest
        self.lines = lines
        self.payload = payload
        self.verdict = verdict

    @property
    def failed(self):
        return self.verdict == "FAIL"

    def to_text(self):
        lines = [f"command: {self.command}"]
        if self.digest is not None:
            lines.append(f"instance: {self.digest}")
        lines.extend(self.lines)
        if self.verdict is not None:
            lines.append(f"verify: {self.verdict}")
        return "\n".join(lines)

    def to_json(self):
        report = {"command": self.command, "instance": self.digest, "result": self.payload}
        if self.verdict is not None:
            report["verify"] = self.verdict
        return json.dumps(report, indent=2, sort_keys=True)

    def render(self, output_format):
        return self.to_json() if output_format == "json" else self.to_text()


def _verdict(passed):
    return "PASS" if passed else "FAIL"


def _target(instance):
    if instance.target is None:
        raise InvalidParameterError(f"INSTANCE {instance.filename} HAS NO TARGET")
    return instance.target


def _basis_lines(basis):
    return [f"row {i}: {format_vector(row)}" for i, row in enumerate(basis.vectors, start=1)]


def cmd_orthogonalize(args):
    instance = instanceFile(args.file)
    command = "orthogonalize --via-cvp" if args.via_cvp else "orthogonalize"

    if args.via_cvp:
        orthogonalizer = cvpOrthogonalizer(instance.lattice, frame_cvp_oracle()).run()
        basis = orthogonalizer.basis
        extra_line = f"oracle calls: {orthogonalizer.oracle_calls}"
        extra = {"oracle_calls": orthogonalizer.oracle_calls}
    else:
        elimination = frameElimination(instance.lattice).run()
        basis = elimination.basis()
        permutation = [column + 1 for column in elimination.permutation]
        extra_line = f"permutation: {' '.join(str(c) for c in permutation)}"
        extra = {"permutation": permutation}

    norms = basis.norms()
    lines = _basis_lines(basis) + [f"norms: {format_norms(norms)}", extra_line]
    payload = {
        "basis": [[str(x) for x in row] for row in basis.vectors],
        "norms": [str(norm) for norm in norms],
        **extra,
    }
    return runReport(command, instance.digest(), lines, payload)


def cmd_cvp(args):
    instance = instanceFile(args.file)
    target = _target(instance)
    solution = cvp_with_frame(instance.lattice, target)

    verdict = None
    if args.verify:
        verdict = _verdict(verify_cvp(instance.lattice, target, solution))

    return runReport(
        "cvp --verify" if args.verify else "cvp",
        instance.digest(),
        solution.to_text().splitlines(),
        solution.to_dict(),
        verdict,
    )


def cmd_lvp(args):
    instance = instanceFile(args.file)
    solution = lvp_with_frame(instance.lattice)

    verdict = None
    if args.verify:
        verdict = _verdict(verify_lvp(instance.lattice, solution))

    return runReport(
        "lvp --verify" if args.verify else "lvp",
        instance.digest(),
        solution.to_text().splitlines(),
        solution.to_dict(),
        verdict,
    )


def cmd_invariants(args):
    instance = instanceFile(args.file)
    report = invariant_report(instance.lattice, args.ladder)

    if args.plot:
        stem = pathlib.Path(args.file).stem
        stream = sys.stderr if args.format == "json" else None
        plot_invariants(report, args.plot, filename=f"{stem}_invariants.png", stream=stream)

    return runReport(
        f"invariants --ladder {args.ladder}",
        instance.digest(),
        report.to_text().splitlines(),
        report.to_dict(),
    )


def _parse_range(text):
    try:
        low, high = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidParameterError(f"RANGE {text!r} MUST LOOK LIKE LOW,HIGH")
    return low, high


def ground_truth_filename(out):
    return pathlib.Path(out).with_suffix(GROUND_TRUTH_SUFFIX)


def cmd_gen(args):
    space, basis, ground_truth = gen_instance(
        args.p,
        args.dim,
        args.rank,
        weight_spec=args.weights,
        valuation_range=_parse_range(args.valuations),
        seed=args.seed,
        random_frame=args.random_frame,
    )
    target = random_vector(space, np.random.default_rng([args.seed, 1]))
    instance = instanceFile.from_objects(space, basis, target)
    instance.write(args.out)

    truth_file = ground_truth_filename(args.out)
    truth = {"seed": args.seed, "p": args.p, "invariants": ground_truth.to_dict()}
    with open(truth_file, "w", encoding="utf-8", newline="\n") as file:
        file.write(json.dumps(truth, indent=2) + "\n")

    command = (
        f"gen --p {args.p} --dim {args.dim} --rank {args.rank} --seed {args.seed} "
        f"--weights {args.weights} --valuations {args.valuations}"
    )
    if args.random_frame:
        command += " --random-frame"

    lines = [f"WROTE INSTANCE TO {args.out}", f"WROTE GROUND TRUTH TO {truth_file}"]
    lines += ground_truth.to_text().splitlines()
    payload = {"out": str(args.out), "truth": str(truth_file), **ground_truth.to_dict()}
    return runReport(command, instance.digest(), lines, payload)


def check_instance(seed):
    """Generate one instance and check every operation against its oracles.

    Parameters
    ----------
    seed : int
        Seed of the instance

    Returns
    -------
    row : dict
        One PASS/FAIL entry per check
    """
    rng = np.random.default_rng(seed)
    p = CHECK_PRIMES[seed % len(CHECK_PRIMES)]
    n = int(rng.integers(1, CHECK_MAX_DIMENSION + 1))
    m = int(rng.integers(1, n + 1))
    weight_spec = WEIGHT_SPECS[seed % len(WEIGHT_SPECS)]

    space, basis, ground_truth = gen_instance(
        p, n, m, weight_spec=weight_spec, valuation_range=CHECK_VALUATION_RANGE, seed=seed
    )
    target = random_vector(space, np.random.default_rng([seed, 1]))

    frame_basis = frameElimination(basis).run().basis()
    cvp_basis = cvpOrthogonalizer(basis).run().basis
    orthogonalize = (
        is_orthogonal_basis(frame_basis)
        and same_lattice(basis, frame_basis)
        and successive_maxima(cvp_basis) == successive_maxima(frame_basis)
    )
    invariants = invariant_report(basis) == ground_truth

    try:
        cvp = _verdict(verify_cvp(basis, target, cvp_with_frame(basis, target)))
        lvp = _verdict(verify_lvp(basis, lvp_with_frame(basis)))
    except OracleBudgetError:
        cvp = lvp = "BUDGET"

    row = {
        "seed": seed,
        "p": p,
        "dim": n,
        "rank": m,
        "weights": weight_spec,
        "orthogonalize": _verdict(orthogonalize),
        "invariants": _verdict(invariants),
        "cvp": cvp,
        "lvp": lvp,
    }
    checks = [row["orthogonalize"], row["invariants"], cvp, lvp]
    row["result"] = _verdict(all(check == "PASS" for check in checks))
    return row


def cmd_check(args):
    if args.count < 1:
        raise InvalidParameterError(f"COUNT MUST BE AT LEAST 1, GOT {args.count}")

    rows = [
        check_instance(seed)
        for seed in tqdm(range(args.seed, args.seed + args.count), desc="checking instances")
    ]
    table = pd.DataFrame(rows)
    failed = int((table["result"] == "FAIL").sum())

    lines = table.to_string(index=False).splitlines()
    lines.append(f"failed: {failed} of {len(table)}")
    payload = {"instances": json.loads(table.to_json(orient="records")), "failed": failed}
    digest = sha256_digest(table.to_csv(index=False))
    return runReport(
        f"check --seed {args.seed} --count {args.count}",
        digest,
        lines,
        payload,
        verdict=_verdict(failed == 0),
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="Output format"
    )

    parser = argparse.ArgumentParser(
        prog="padic_lattice", description="Exact algorithms on p-adic lattices"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    orthogonalize = subparsers.add_parser(
        "orthogonalize", parents=[common], help="N-orthogonal basis of a lattice"
    )
    orthogonalize.add_argument("file", type=str, help="Instance file")
    orthogonalize.add_argument(
        "--via-cvp", action="store_true", help="Orthogonalize with the CVP oracle algorithm"
    )
    orthogonalize.set_defaults(func=cmd_orthogonalize)

    cvp = subparsers.add_parser("cvp", parents=[common], help="Closest vector to the target")
    cvp.add_argument("file", type=str, help="Instance file with a target")
    cvp.add_argument("--verify", action="store_true", help="Check against the brute force oracle")
    cvp.set_defaults(func=cmd_cvp)

    lvp = subparsers.add_parser("lvp", parents=[common], help="Vector of norm lambda_2")
    lvp.add_argument("file", type=str, help="Instance file")
    lvp.add_argument("--verify", action="store_true", help="Check against the brute force oracle")
    lvp.set_defaults(func=cmd_lvp)

    invariants = subparsers.add_parser(
        "invariants", parents=[common], help="Successive maxima, escape distance, norm ladder"
    )
    invariants.add_argument("file", type=str, help="Instance file")
    invariants.add_argument(
        "--ladder", type=int, default=DEFAULT_LADDER_LENGTH, help="Number of ladder values"
    )
    invariants.add_argument("--plot", type=str, default=None, help="Directory to write a figure")
    invariants.set_defaults(func=cmd_invariants)

    check = subparsers.add_parser(
        "check", parents=[common], help="Check generated instances against the oracles"
    )
    check.add_argument("--seed", type=int, default=0, help="First seed")
    check.add_argument(
        "--count", type=int, default=DEFAULT_CHECK_COUNT, help="Number of instances"
    )
    check.set_defaults(func=cmd_check)

    gen = subparsers.add_parser("gen", parents=[common], help="Generate a seeded instance")
    gen.add_argument("--p", type=int, required=True, help="Prime")
    gen.add_argument("--dim", type=int, required=True, help="Dimension of the space")
    gen.add_argument("--rank", type=int, required=True, help="Rank of the lattice")
    gen.add_argument("--seed", type=int, default=0, help="Random seed")
    gen.add_argument("--out", type=str, required=True, help="Instance file to write")
    gen.add_argument("--weights", choices=WEIGHT_SPECS, default="zero", help="Weight exponents")
    gen.add_argument(
        "--valuations", type=str, default="0,4", help="Diagonal valuation range LOW,HIGH"
    )
    gen.add_argument(
        "--random-frame", action="store_true", help="Use a random frame instead of the identity"
    )
    gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        report = args.func(args)
    except InvalidParameterError as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OracleBudgetError as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return EXIT_VERIFICATION_ERROR
    except PadicLatticeError as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return EXIT_PRECONDITION_ERROR
    except OSError as error:
        print(f"ERROR: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(report.render(args.format))
    return EXIT_VERIFICATION_ERROR if report.failed else EXIT_SUCCESS


if __name__ == "__main__":
    sys.exit(main())
