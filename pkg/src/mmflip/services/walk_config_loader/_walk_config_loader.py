import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator, ValidationError

from mmschemes.search import WalkConfig
from mmschemes.serialization import make_walk_converter

_IGNORED_KEYS = ("$id", "$schema")


def _present(values: Mapping[str, Any] | None) -> dict[str, Any]:
    return {key: value for key, value in (values or {}).items() if value is not None}


class WalkConfigLoader:
    def __init__(self) -> None:
        schema_path = Path(__file__).parent.resolve().joinpath("walk_config.schema.json")
        self._schema = json.loads(schema_path.read_text())
        self._validator = Draft202012Validator(self._schema)
        self._converter = make_walk_converter()

    def load_walk_config(
        self,
        content: str = "{}",
        *,
        defaults: Mapping[str, Any] | None = None,
        overrides: Mapping[str, Any] | None = None,
    ) -> list[ValidationError] | WalkConfig:
        """Validates a JSON walk configuration and converts it into a `WalkConfig`.

        Args:
            content (str, optional): The JSON document. Defaults to an empty object.
            defaults (Mapping[str, Any] | None, optional): Values used where `content` has none.
            overrides (Mapping[str, Any] | None, optional): Values that replace those in `content`, typically from the
            command line. `None` values are ignored in both mappings.

        Returns:
            list[ValidationError] | WalkConfig: The validation errors sorted by path, or the configuration.
        """
        json_content = json.loads(content)
        if isinstance(json_content, dict):
            json_content = _present(defaults) | json_content | _present(overrides)
        errors: list[ValidationError] = sorted(
            self._validator.iter_errors(instance=json_content),
            key=lambda e: [str(part) for part in e.path],
        )
        if errors:
            return errors

        values = {key: value for key, value in json_content.items() if key not in _IGNORED_KEYS}
        return self._converter.structure(values, WalkConfig)
