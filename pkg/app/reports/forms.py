# File: reports/forms.py
import json
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from django import forms
from django.core.exceptions import NON_FIELD_ERRORS
from django.forms import ValidationError
from django.utils.translation import gettext_lazy as _

from reports.fields import IntegerRowsField

from toric.fan import make_fan

__all__ = [
    "FanFile",
    "FanFileForm",
    "parse_fan_file",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FanFile:
    name: str
    rank: int
    rays: Tuple[Tuple[int, ...], ...]
    max_cones: Tuple[FrozenSet[int], ...]

    @property
    def fan(self):
        return make_fan(self.rank, self.rays, self.max_cones, name=self.name)


class FanFileForm(forms.Form):
    """
    The structural part of a fan file: field types, ray lengths and cone
    indices. Geometric validation is left to ``toric.fan.validate``.

    """

    name = forms.CharField(required=False, max_length=200)
    rank = forms.IntegerField(min_value=1)
    rays = IntegerRowsField()
    max_cones = IntegerRowsField()

    def clean(self):
        cleaned_data = super(FanFileForm, self).clean()

        rank = cleaned_data.get("rank")
        rays = cleaned_data.get("rays")
        max_cones = cleaned_data.get("max_cones")

        # Field errors have already been recorded.
        if rank is None or rays is None or max_cones is None:
            return cleaned_data

        for index, ray in enumerate(rays):
            if len(ray) != rank:
                raise ValidationError(
                    _("Ray %(index)s has %(length)s coordinates, expected %(rank)s."),
                    code="index_out_of_range",
                    params={"index": index, "length": len(ray), "rank": rank},
                )

        for index, cone in enumerate(max_cones):
            bad = sorted(i for i in cone if not 0 <= i < len(rays))
            if bad:
                raise ValidationError(
                    _("Cone %(index)s refers to missing rays %(indices)s."),
                    code="index_out_of_range",
                    params={"index": index, "indices": bad},
                )

        return cleaned_data

    def to_fan_file(self):
        return FanFile(
            name=self.cleaned_data["name"],
            rank=self.cleaned_data["rank"],
            rays=self.cleaned_data["rays"],
            max_cones=tuple(frozenset(cone) for cone in self.cleaned_data["max_cones"]),
        )


def first_error(form):
    """ Re-raise the first form error with the offending field in its params. """
    for field_name, errors in form.errors.as_data().items():
        error = errors[0]
        params = dict(error.params or {})
        if field_name != NON_FIELD_ERRORS:
            params["field"] = field_name
        return ValidationError(
            error.message, code=error.code or "parse_error", params=params
        )


def parse_fan_file(data):
    """
    Parse UTF-8 JSON bytes into a FanFile.

    Raises ValidationError with code ``parse_error`` for undecodable or
    malformed input, or with the form's own code for structural errors.

    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ValidationError(
            _("Fan file is not UTF-8 (byte %(position)s)."),
            code="parse_error",
            params={"position": exc.start},
        )

    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            _("Malformed JSON at line %(line)s, column %(column)s: %(reason)s."),
            code="parse_error",
            params={"line": exc.lineno, "column": exc.colno, "reason": exc.msg},
        )

    if not isinstance(payload, dict):
        raise ValidationError(
            _("A fan file must be a JSON object."), code="parse_error"
        )

    form = FanFileForm(data=payload)
    if not form.is_valid():
        raise first_error(form)

    fan_file = form.to_fan_file()
    logger.debug("Parsed fan file %r with %d rays", fan_file.name, len(fan_file.rays))
    return fan_file
