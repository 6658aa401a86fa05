# File: reports/pipeline.py
"""
Subcommand execution: from a fan file to a JSON-ready report tree and an exit
status (0 success, 1 invalid input, 2 internal invariant violation).

"""
import logging

from django.forms import ValidationError

from reports import serializers
from reports.forms import parse_fan_file

from toric import fan as fans
from toric.autstructure import aut0_report
from toric.classgroup import class_group, ray_classes_in_group, sections
from toric.exceptions import InvariantViolation, LengthMismatch, SearchTooLarge
from toric.fanauto import component_group, lattice_automorphisms
from toric.roots import (
    class_order,
    classify_roots,
    enumerate_roots,
    ray_classes,
    root_counts,
    tangent_basis,
)
from toric.symbolic import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2

SUBCOMMANDS = (
    "validate",
    "classgroup",
    "roots",
    "classes",
    "aut0",
    "symmetries",
    "component-group",
    "report",
    "sections",
    "derivations",
)


def _snake(name):
    return "".join("_" + c.lower() if c.isupper() else c for c in name).lstrip("_")


def error_report(exc):
    """ The ``{"error": {...}}`` tree for a failed run. """
    if isinstance(exc, ValidationError):
        details = dict(getattr(exc, "params", None) or {})
        code = getattr(exc, "code", None) or "invalid"
        message = next(iter(exc))
    elif isinstance(exc, InvariantViolation):
        details = dict(exc.details)
        code = exc.code
        message = exc.message
    else:
        details = {}
        code = _snake(type(exc).__name__)
        message = str(exc)
    return {"error": {"code": code, "message": str(message), "details": details}}


def _roots(vfan):
    return classify_roots(enumerate_roots(vfan), vfan)


def _classes(vfan, found):
    return ray_classes(vfan, found, class_group(vfan))


def _validate(vfan, options):
    logger.warning(fans.COMPLETENESS_NOTE)
    return {
        "valid": True,
        "completeness": fans.COMPLETENESS_NOTE,
        "facets": serializers.facets(vfan),
    }


def _classgroup(vfan, options):
    data = class_group(vfan)
    return serializers.class_group(data, ray_classes_in_group(data))


def _list_roots(vfan, options):
    found = _roots(vfan)
    return serializers.roots(found, root_counts(vfan, found))


def _list_classes(vfan, options):
    found = _roots(vfan)
    classes = _classes(vfan, found)
    return serializers.classes(classes, class_order(vfan, found, classes))


def _aut0(vfan, options):
    return serializers.aut0(aut0_report(vfan))


def _symmetries(vfan, options):
    return serializers.symmetries(lattice_automorphisms(vfan))


def _component_group(vfan, options):
    classes = _classes(vfan, _roots(vfan))
    return serializers.component_group(component_group(vfan, classes))


def _full_report(vfan, options):
    report = aut0_report(vfan)
    return {
        "aut0": serializers.aut0(report),
        "component_group": serializers.component_group(
            component_group(vfan, report.classes)
        ),
    }


def _sections(vfan, options):
    divisor = options.get("divisor") or (0,) * vfan.ray_count
    points = sections(vfan, divisor)
    return {
        "divisor": list(divisor),
        "count": len(points),
        "sections": [list(p) for p in points],
    }


def _derivations(vfan, options):
    basis = tangent_basis(vfan, _roots(vfan))
    return {"dimension": len(basis), "basis": [d.label for d in basis]}


HANDLERS = {
    "validate": _validate,
    "classgroup": _classgroup,
    "roots": _list_roots,
    "classes": _list_classes,
    "aut0": _aut0,
    "symmetries": _symmetries,
    "component-group": _component_group,
    "report": _full_report,
    "sections": _sections,
    "derivations": _derivations,
}


def run(subcommand, fan_file, check=False, box=None, divisor=None):
    """
    Run one subcommand on a parsed fan file.

    Returns (report, exit status). Every failure is turned into an error
    report; nothing is raised.

    """
    if subcommand not in HANDLERS:
        raise ValueError("Unknown subcommand %r." % subcommand)

    report = {"subcommand": subcommand}
    try:
        logger.info("Validating fan %r", fan_file.name)
        vfan = fans.validate(fan_file.fan)
        report["fan"] = serializers.fan_summary(vfan)

        logger.info("Running %s", subcommand)
        report.update(HANDLERS[subcommand](vfan, {"divisor": divisor}))

        if check:
            logger.info("Running the symbolic verification suite")
            report["verification"] = serializers.verification(
                run_suite(vfan, _roots(vfan), box)
            )
    except ValidationError as exc:
        report.update(error_report(exc))
        return report, EXIT_INVALID
    except InvariantViolation as exc:
        logger.error("Invariant violated: %s", exc.message)
        report.update(error_report(exc))
        return report, EXIT_INTERNAL
    except (LengthMismatch, SearchTooLarge) as exc:
        # The only preconditions a user can break on a valid fan.
        report.update(error_report(exc))
        return report, EXIT_INVALID
    except ValueError as exc:
        logger.error("Library precondition failed on a valid fan: %s", exc)
        report.update(error_report(exc))
        return report, EXIT_INTERNAL

    return report, EXIT_OK


def execute(subcommand, data, **options):
    """ Parse fan file bytes, then ``run``. """
    try:
        fan_file = parse_fan_file(data)
    except ValidationError as exc:
        report = {"subcommand": subcommand}
        report.update(error_report(exc))
        return report, EXIT_INVALID
    return run(subcommand, fan_file, **options)
