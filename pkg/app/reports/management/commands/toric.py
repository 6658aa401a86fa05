# File: reports/management/commands/toric.py
import logging
import os

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from reports import pipeline
from reports.renderers import FORMATS, render

logger = logging.getLogger(__name__)


def parse_divisor(value):
    """ Parse ``--divisor 1,0,-2`` into a tuple of ints. """
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise CommandError(
            "--divisor expects comma-separated integers, got %r." % value
        )


class Command(BaseCommand):
    help = (
        "Compute the automorphism group structure of the complete toric variety "
        "described by a fan file."
    )

    def add_arguments(self, parser):
        parser.add_argument("subcommand", choices=pipeline.SUBCOMMANDS)
        parser.add_argument(
            "fan_file",
            help="Path to a JSON fan file, or the name of a bundled fan (e.g. P2).",
        )
        parser.add_argument("--format", choices=FORMATS, default="text")
        parser.add_argument(
            "--check",
            action="store_true",
            help="Also run the symbolic verification suite.",
        )
        parser.add_argument(
            "--box",
            type=int,
            default=None,
            help="Half-width of the monomial sample box for --check.",
        )
        parser.add_argument(
            "--divisor",
            default=None,
            help="Coefficients n_1,...,n_r of a divisor, for 'sections'.",
        )

    def resolve(self, fan_file):
        if os.path.isfile(fan_file):
            return fan_file

        bundled = os.path.join(settings.TORIC_FAN_DIR, fan_file)
        for candidate in (bundled, bundled + ".json"):
            if os.path.isfile(candidate):
                return candidate

        raise CommandError("Fan file %r not found." % fan_file)

    def handle(self, *args, **options):
        path = self.resolve(options["fan_file"])
        divisor = options["divisor"]
        if divisor is not None:
            divisor = parse_divisor(divisor)
        if options["box"] is not None and options["box"] < 0:
            raise CommandError("--box must be non-negative.")

        with open(path, "rb") as fan_file:
            data = fan_file.read()

        report, status = pipeline.execute(
            options["subcommand"],
            data,
            check=options["check"],
            box=options["box"],
            divisor=divisor,
        )

        self.stdout.write(render(report, options["format"]))

        if status != pipeline.EXIT_OK:
            raise CommandError(
                "%s failed: %s" % (options["subcommand"], report["error"]["code"]),
                returncode=status,
            )
