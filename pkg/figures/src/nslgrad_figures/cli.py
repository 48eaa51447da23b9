"""CLI: render --kind <angular|power|oam|ratio> --in <csv...> --out <path>."""

import argparse
import sys

from .render import DEFAULT_PANEL_BOUNDS_NM, KINDS, FigureJob, SchemaError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="render", description="Render nslgrad sweep CSVs to figure files")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--in", dest="inputs", nargs="+", required=True,
                        metavar="CSV", help="input CSV file(s)")
    parser.add_argument("--out", required=True, help="output image path (.svg/.pdf/.png)")
    parser.add_argument("--panel-bounds-nm", nargs=2, type=float,
                        default=list(DEFAULT_PANEL_BOUNDS_NM),
                        help="sigma0 panel boundaries for sweep figures")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    job = FigureJob(kind=args.kind, inputs=tuple(args.inputs), output=args.out,
                    panel_bounds_nm=tuple(args.panel_bounds_nm))
    try:
        render(job)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"render error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
