import re
from typing import Final

KEY_DELIMITER: Final = ":"

_ACRONYM_BOUNDARY = re.compile(r"([A-Z]+)([A-Z][a-z])")
_WORD_BOUNDARY = re.compile(r"([a-z0-9])([A-Z])")


def join_path(*segments: str) -> str:
    return KEY_DELIMITER.join(segment for segment in segments if segment)


def section_key(path: str) -> str:
    """Return the last segment of a configuration path."""
    return path.rsplit(KEY_DELIMITER, 1)[-1]


def to_snake_case(key: str) -> str:
    """Normalize a PascalCase, camelCase or kebab-case key to snake_case.

    Path delimiters are kept, so `Search:EnumerationLimit` becomes
    `search:enumeration_limit`.
    """
    converted = _ACRONYM_BOUNDARY.sub(r"\1_\2", key)
    converted = _WORD_BOUNDARY.sub(r"\1_\2", converted)
    return converted.replace("-", "_").lower()
