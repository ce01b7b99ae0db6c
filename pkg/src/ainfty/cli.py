"""Command line: `ainfty verify <target>` and `ainfty enumerate <target>`.

Exit status is 0 when the report has no failures, 1 when it has some and
2 for invalid arguments or caps.
"""
import argparse
import sys

from .report import ENUMERATE_TARGETS, VERIFY_TARGETS, CapError, RunConfig, run, to_json, to_text


def build_parser():
    p = argparse.ArgumentParser(prog="ainfty", description="Weighted A-infinity algebra and bimodule checks.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, targets in (("verify", VERIFY_TARGETS), ("enumerate", ENUMERATE_TARGETS)):
        s = sub.add_parser(name)
        s.add_argument("target", choices=targets)
        s.add_argument("--n", type=int, default=3, help="number of spokes N (>= 3)")
        s.add_argument("--max-inputs", type=int)
        s.add_argument("--max-weight", type=int)
        s.add_argument("--max-len", type=int)
        s.add_argument("--samples", type=int)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.add_argument("--out", help="write the report here instead of stdout")
        if name == "enumerate":
            s.add_argument("--j", type=int, help="vertex count for the algebra-a census")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, target=args.target, N=args.n,
                    max_inputs=args.max_inputs, max_weight=args.max_weight, max_len=args.max_len,
                    samples=args.samples, seed=args.seed, j=getattr(args, "j", None))
    try:
        report, wall = run(cfg)
    except (CapError, ValueError) as e:
        print("ainfty: error: %s" % e, file=sys.stderr)
        return 2
    text = to_json(report) if args.format == "json" else to_text(report, wall)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
