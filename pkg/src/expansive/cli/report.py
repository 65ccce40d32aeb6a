"""Validation of emitted reports against the bundled JSON schema."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema


@lru_cache(maxsize=1)
def report_schema() -> dict:
    return json.loads(resources.files("expansive.cli").joinpath("report.schema.json").read_text("utf-8"))


def validate_report(report: dict) -> None:
    """Raise jsonschema.ValidationError if the report does not match the schema."""
    jsonschema.validate(report, report_schema())
