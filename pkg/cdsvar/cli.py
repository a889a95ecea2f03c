# -*- coding: utf-8 -*-

"""
cdsvar.cli
~~~~~~~~~~

The command line front end::

    cdsvar study --config study.json [--output DIR] [--lag-order 5] ...
    cdsvar cds --contract contract.json [--periods-paid N] [--out DIR]
    cdsvar simulate --spec spec.json --out DIR

Exit codes: 0 on success, 2 when an input or the configuration is invalid, 3 when a
model has no estimable entity.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import argparse
import json
import sys

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import CdsVarException, StatisticalError

# # Class Representation
from cdsvar.models.config import StudyConfig
from cdsvar.models.logger import Logger

# # Utilities
from cdsvar.utils.format import cds_report_text, to_jsonable

# # Business logic
from cdsvar.controller import study

logger = Logger.setup_logger(name="cdsvar.cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_STATISTICAL = 3


def build_parser() -> argparse.ArgumentParser:
    """The ``study``, ``cds`` and ``simulate`` subcommands"""

    parser = argparse.ArgumentParser(
        prog="cdsvar",
        description="Share, bond and CDS difference-VAR study and CDS cash flows",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("study", help="run the study of a JSON configuration")
    run.add_argument("--config", required=True, help="study configuration JSON")
    run.add_argument("--observations", help="observations CSV")
    run.add_argument("--entities", help="entities CSV")
    run.add_argument("--output", help="report directory")
    run.add_argument("--lag-order", dest="lag_order", type=int)
    run.add_argument("--horizon", type=int)
    run.add_argument("--significance", type=float)
    run.add_argument("--seed", type=int)
    run.add_argument("--workers", type=int)
    run.add_argument("--breakpoints", nargs="*", help="sub-period start dates")
    run.add_argument("--no-plots", dest="plots", action="store_false", default=None)

    contract = commands.add_parser("cds", help="premium schedule and P&L of a contract")
    contract.add_argument("--contract", required=True, help="contract JSON")
    contract.add_argument("--periods-paid", dest="periods_paid", type=int,
                          help="premium periods paid before the credit event")
    contract.add_argument("--out", help="directory receiving schedule.csv and cds.json")
    contract.add_argument("--json", action="store_true", help="print the report as JSON")

    simulated = commands.add_parser("simulate", help="write a simulated dataset")
    simulated.add_argument("--spec", required=True, help="simulation spec JSON")
    simulated.add_argument("--out", required=True, help="output directory")

    return parser


def main(argv: list = None) -> int:
    """Main logic for the CLI, returns the exit code"""

    arguments = build_parser().parse_args(argv)

    try:
        if arguments.command == "study":
            config = StudyConfig.from_json(
                arguments.config,
                observations=arguments.observations,
                entities=arguments.entities,
                output=arguments.output,
                lag_order=arguments.lag_order,
                horizon=arguments.horizon,
                significance=arguments.significance,
                seed=arguments.seed,
                workers=arguments.workers,
                breakpoints=arguments.breakpoints,
                plots=arguments.plots,
            )
            manifest = study.run_study(config)
            print(f"{len(manifest['files'])} files written to {config.output}")

        elif arguments.command == "cds":
            report = study.run_cds(arguments.contract, arguments.periods_paid, arguments.out)
            if arguments.json:
                print(json.dumps(to_jsonable(report), sort_keys=True, indent=2))
            else:
                print(cds_report_text(report))

        else:
            manifest = study.run_simulate(arguments.spec, arguments.out)
            print(f"{manifest['rows']} rows written to {arguments.out}")

    except StatisticalError as exception:
        logger.error(str(exception))
        return EXIT_STATISTICAL
    except (CdsVarException, OSError) as exception:
        logger.error(str(exception))
        return EXIT_INPUT

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
