# File: reports/renderers.py
import json

from django.conf import settings
from django.core.serializers.json import DjangoJSONEncoder

FORMATS = ("text", "json")


def render_json(report):
    """ Deterministic JSON: sorted keys, fixed indentation. """
    return json.dumps(
        report,
        cls=DjangoJSONEncoder,
        sort_keys=True,
        indent=getattr(settings, "TORIC_JSON_INDENT", 2),
        ensure_ascii=False,
    )


def _is_scalar_list(value):
    return isinstance(value, list) and all(
        not isinstance(item, (dict, list)) or _is_scalar_list(item) for item in value
    )


def _inline(value):
    if isinstance(value, list):
        return "[%s]" % ", ".join(_inline(item) for item in value)
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _lines(value, depth):
    pad = "  " * depth
    if isinstance(value, dict):
        for key, item in value.items():
            label = key.replace("_", " ")
            if isinstance(item, dict) or (
                isinstance(item, list) and not _is_scalar_list(item)
            ):
                yield "%s%s:" % (pad, label)
                yield from _lines(item, depth + 1)
            else:
                yield "%s%s: %s" % (pad, label, _inline(item))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                nested = list(_lines(item, depth + 1))
                yield "%s- %s" % (pad, nested[0].strip()) if nested else pad + "-"
                yield from nested[1:]
            else:
                yield "%s- %s" % (pad, _inline(item))
    else:
        yield pad + _inline(value)


def render_text(report):
    """
    Human-readable rendering. The structure formula, when present, leads the
    output with its dimensions annotated.

    """
    lines = []
    aut0 = report.get("aut0") if "aut0" in report else report
    formula = aut0.get("formula") if isinstance(aut0, dict) else None
    if formula:
        lines.append(
            "%s   [dim %s = %s reductive + %s unipotent]"
            % (
                formula,
                aut0["total_dimension"],
                aut0["reductive"]["dimension"],
                aut0["unipotent"]["total_dimension"],
            )
        )
    lines.extend(_lines(report, 0))
    return "\n".join(lines)


def render(report, output_format="text"):
    if output_format == "json":
        return render_json(report)
    return render_text(report)
