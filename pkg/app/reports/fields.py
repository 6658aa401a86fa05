# File: reports/fields.py
from django.forms import ValidationError
from django.forms.fields import Field

from django.utils.translation import gettext_lazy as _


def _to_int(value):
    # JSON numbers arrive as int; very large values may be sent as strings.
    if isinstance(value, bool):
        raise ValueError(value)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("+-").isdigit():
        return int(value.strip())
    raise ValueError(value)


class IntegerRowsField(Field):
    """
    A list of lists of integers, such as the rays or the maximal cones of a
    fan file.

    """

    default_error_messages = {
        "not_a_list": _("Expected a list of integer lists."),
        "not_a_row": _("Entry %(row)s is not a list."),
        "not_an_integer": _("Entry %(row)s contains %(value)s, not an integer."),
        "too_few_rows": _("Expected at least %(min_rows)s entries."),
    }

    def __init__(self, min_rows=1, **kwargs):
        self.min_rows = min_rows
        super(IntegerRowsField, self).__init__(**kwargs)

    def to_python(self, value):
        if value in self.empty_values:
            return ()

        if not isinstance(value, (list, tuple)):
            raise ValidationError(self.error_messages["not_a_list"], code="parse_error")

        rows = []
        for index, row in enumerate(value):
            if not isinstance(row, (list, tuple)):
                raise ValidationError(
                    self.error_messages["not_a_row"],
                    code="parse_error",
                    params={"row": index},
                )
            try:
                rows.append(tuple(_to_int(entry) for entry in row))
            except ValueError as exc:
                raise ValidationError(
                    self.error_messages["not_an_integer"],
                    code="parse_error",
                    params={"row": index, "value": repr(exc.args[0])},
                )

        return tuple(rows)

    def validate(self, value):
        super(IntegerRowsField, self).validate(value)

        if len(value) < self.min_rows:
            raise ValidationError(
                self.error_messages["too_few_rows"],
                code="parse_error",
                params={"min_rows": self.min_rows},
            )
