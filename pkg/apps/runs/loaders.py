"""YAML loading of run configurations."""

import logging
from pathlib import Path

import yaml

from .exceptions import ConfigError
from .serializers import RunConfigSerializer
from .serializers import flatten_errors

logger = logging.getLogger(__name__)


class UniqueKeyLoader(yaml.SafeLoader):
    """SafeLoader that refuses a mapping key given twice."""

    def construct_mapping(self, node, deep=False):
        seen = set()
        for key_node, _ in node.value:
            key = self.construct_object(key_node, deep=deep)
            if key in seen:
                msg = f"Duplicate key '{key}'"
                raise ConfigError(msg, key=key, line=key_node.start_mark.line + 1)
            seen.add(key)
        return super().construct_mapping(node, deep=deep)


def parse_document(text):
    try:
        document = yaml.load(text, Loader=UniqueKeyLoader)  # noqa: S506
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        msg = f"Malformed configuration: {exc.problem}"
        raise ConfigError(msg, line=mark.line + 1, column=mark.column + 1) from exc
    return {} if document is None else document


def describe_errors(errors):
    """One message listing every missing key first, then the other problems."""
    leaves = list(flatten_errors(errors))
    missing = [path for path, _, code in leaves if code == "required"]
    problems = [
        f"{path}: {message}" for path, message, code in leaves if code != "required"
    ]
    parts = []
    if missing:
        parts.append("missing required keys: " + ", ".join(missing))
    parts.extend(problems)
    return "Invalid configuration; " + "; ".join(parts)


def build_config(document):
    """Validate a parsed document into a ``RunConfig``."""
    serializer = RunConfigSerializer(data=document)
    if not serializer.is_valid():
        raise ConfigError(describe_errors(serializer.errors))
    return serializer.save()


def load_config(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        msg = "Cannot read the configuration file"
        raise ConfigError(msg, path=str(path)) from exc
    config = build_config(parse_document(text))
    logger.info("Loaded configuration %s", path)
    return config
