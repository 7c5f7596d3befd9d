import os
from dataclasses import dataclass
from pathlib import Path

import structlog

from amcmpy.constants.project import PROJECT_ENV, DEFAULT_PROJECT_FILE
from amcmpy.core.exceptions import ConfigError, ParseError
from amcmpy.utils.utils_file import build_path, create_directory
from amcmpy.utils.utils_parser import parse_key_values, split_list

logger = structlog.get_logger(__name__)

REQUIRED_KEYS = ('content_root', 'templates', 'bindings', 'output_dir')
OPTIONAL_KEYS = ('default_context',)


@dataclass(frozen=True, slots=True)
class ProjectConfig:
    path: Path
    content_root: Path
    templates: tuple
    bindings: tuple
    default_context: Path | None
    output_dir: Path


def project_path(explicit: str = None) -> Path:
    """``--project`` beats ``AMCM_PROJECT``, which beats ``./amcm.conf``."""
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(PROJECT_ENV) or DEFAULT_PROJECT_FILE)

def _existing(path: Path, key: str, config: Path) -> Path:
    if not path.exists():
        raise ConfigError(f"{config}: '{key}' refers to missing path '{path}'")
    return path

def load_config(path) -> ProjectConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"cannot read project file '{path}': {e.strerror or e}") from e
    try:
        entries = {entry.key: entry.value for entry in parse_key_values(text, str(path))}
    except ParseError as e:
        raise ConfigError(str(e)) from e

    unknown = sorted(set(entries) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
    if unknown:
        raise ConfigError(f"{path}: unknown key(s) {', '.join(unknown)}")
    missing = [key for key in REQUIRED_KEYS if not entries.get(key)]
    if missing:
        raise ConfigError(f"{path}: missing key(s) {', '.join(missing)}")

    base = path.parent
    def resolve(key: str, value: str) -> Path:
        return _existing(build_path(value, base=base), key, path)

    content_root = resolve('content_root', entries['content_root'])
    if not content_root.is_dir():
        raise ConfigError(f"{path}: content_root '{content_root}' is not a directory")
    templates = tuple(resolve('templates', item) for item in split_list(entries['templates']))
    bindings = tuple(resolve('bindings', item) for item in split_list(entries['bindings']))
    default_context = entries.get('default_context')
    default_context = resolve('default_context', default_context) if default_context else None

    output_dir = build_path(entries['output_dir'], base=base)
    create_directory(output_dir)

    config = ProjectConfig(path, content_root, templates, bindings, default_context, output_dir)
    logger.debug("config_loaded", path=str(path), templates=len(templates), bindings=len(bindings))
    return config
