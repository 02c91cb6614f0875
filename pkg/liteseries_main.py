from dotenv import load_dotenv
import argparse
import logging
import sys

_ = load_dotenv()
from liteseries.core.commands import EXIT_BAD_INPUT, cmd_expand, cmd_oracle, cmd_verify
from liteseries.core.config import load_config
from liteseries.utils.utils import setup_logger

logger = logging.getLogger(__name__)

# flag name -> dotted config key
OVERRIDES = {
    "k1": "k1",
    "k2": "k2",
    "f0": "f0",
    "order": "order",
    "theta": "grid.theta",
    "y_min": "grid.y_min",
    "y_max": "grid.y_max",
    "ny": "grid.ny",
    "z_start": "grid.z_start",
    "z_end": "grid.z_end",
    "nz": "grid.nz",
    "source": "grid.source",
}


def _overrides(args):
    values = {}
    for flag, key in OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if flag == "f0" and value.strip() != "y":
            value = [c.strip() for c in value.split(',')]
        values[key] = value
    return values


def main(args):
    setup_logger(logging.DEBUG if args.verbose else logging.INFO)
    try:
        config = load_config(args.config, _overrides(args))
    except (OSError, ValueError) as e:
        # pydantic's ValidationError is a ValueError
        logger.error("invalid configuration: %s", e)
        return EXIT_BAD_INPUT

    if args.command == "expand":
        return cmd_expand(config, out=args.out)
    if args.command == "verify":
        return cmd_verify(config, series_in=args.series_in, out=args.out)
    return cmd_oracle(config, series_in=args.series_in, out_dir=args.out_dir)


def build_parser():
    parser = argparse.ArgumentParser(description="Exact power-series solutions of the transformed Black-Scholes equation.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, default=None, help="Path to the JSON run configuration")
    common.add_argument('--k1', type=str, default=None, help="Model constant k1 as 'p/q'")
    common.add_argument('--k2', type=str, default=None, help="Model constant k2 as 'p/q'")
    common.add_argument('--f0', type=str, default=None,
                        help="Initial profile: 'y' or comma-separated coefficients by degree")
    common.add_argument('--order', type=int, default=None, help="Truncation order N (default: 12)")
    common.add_argument('--theta', type=str, default=None, help="Theta of the oracle scheme (default: 1/2)")
    for name in ("y_min", "y_max", "z_start", "z_end"):
        common.add_argument(f'--{name}', type=float, default=None)
    common.add_argument('--ny', type=int, default=None)
    common.add_argument('--nz', type=int, default=None)
    common.add_argument('--source', type=str, default=None, choices=["closed_form", "series"],
                        help="Initial and boundary data for the oracle")
    common.add_argument('--verbose', action='store_true', help="Log per-order details")

    expand_parser = subparsers.add_parser('expand', parents=[common], help="Compute the exact series")
    expand_parser.add_argument('--out', type=str, default=None, help="Series JSON output path")

    verify_parser = subparsers.add_parser('verify', parents=[common], help="Check recurrence, ADM identity and residual order")
    verify_parser.add_argument('--series-in', dest='series_in', type=str, default=None,
                               help="Verify this series file instead of expanding")
    verify_parser.add_argument('--out', type=str, default=None, help="Report JSON output path")

    oracle_parser = subparsers.add_parser('oracle', parents=[common], help="Compare against the finite-difference oracle")
    oracle_parser.add_argument('--series-in', dest='series_in', type=str, default=None)
    oracle_parser.add_argument('--out-dir', dest='out_dir', type=str, default=None, help="Directory for CSV outputs")
    return parser


if __name__ == "__main__":
    sys.exit(main(build_parser().parse_args()))
