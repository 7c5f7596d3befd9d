import os
import tempfile
from pathlib import Path

import structlog

logger = structlog.get_logger(__name__)


def write_atomic(path, text: str) -> Path:
    """
    Write text to path through a temporary file in the same directory and
    rename it into place: readers see the old file or the new one, never a
    torn one.
    """
    path = Path(path)
    create_directory(path.parent)
    fd, temp = tempfile.mkstemp(prefix=f".{path.name}.", suffix='.tmp', dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(temp, path)
    except BaseException:
        Path(temp).unlink(missing_ok=True)
        raise
    logger.debug("file_written", path=str(path), size=len(text))
    return path

def write_all_atomic(outputs: dict) -> list:
    """Write several files only after every text is known; returns the written paths."""
    return [write_atomic(path, text) for path, text in outputs.items()]

def create_directory(directory) -> None:
    """Creates a directory if it does not exist."""
    directory = Path(directory)
    if not directory.exists():
        logger.debug("directory_created", path=str(directory))
    directory.mkdir(parents=True, exist_ok=True)

def build_path(*segments, base=None) -> Path:
    """Join segments; a relative result is resolved against base when given."""
    path = Path(*segments)
    if base is not None and not path.is_absolute():
        path = Path(base) / path
    return Path(os.path.normpath(path))

def read_text(path) -> str:
    return Path(path).read_text(encoding='utf-8')
