"""Interface for standard modules os, json and tempfile"""

# Standard modules
import json
import os
import tempfile
from logging import Logger
from typing import IO

# Local modules
from ..core.errors import ConfigError


def open_utf8(path: str, mode: str, logger: Logger = None, *, create: bool = True) -> IO:
    """Open a file with UTF-8 encoding

    path: the path of the file
    mode: the mode to use to open the file
    logger: the logger to log information and warnings
    create: do create missing parent directories
    """

    # Check for directory
    if create and directory(path) != "" and not exists(directory(path)):
        if logger:
            logger.info(f"Doesn't found directory '{directory(path)}'! Create directory ...")
        make_dir(directory(path), logger)

    if logger:
        logger.debug(f"Open file '{path}' with mode '{mode}' ...")
    return open(path, mode, encoding="utf-8")


def load_json(path: str, logger: Logger = None) -> dict:
    """Load a json file holding an object to a dictionary

    path: the path of the file
    logger: the logger to log information and warnings
    """

    if not is_file(path):
        if logger:
            logger.warning(f"Doesn't found file '{path}'! Raise error ...")
        raise ConfigError(f"Config file '{path}' does not exist!")

    try:
        with open_utf8(path, "r", logger, create=False) as f:
            data = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as error:
        if logger:
            logger.warning(f"Failed to decode file '{path}' to json! Raise error ...")
        raise ConfigError(f"Malformed JSON in '{path}': {error}") from error

    if not isinstance(data, dict):
        raise ConfigError(f"Expected a JSON object in '{path}', got {type(data).__name__}!")
    return data


def save_text(path: str, text: str, logger: Logger = None) -> None:
    """Write a text file atomically through a temporary file in the same directory

    path: the path of the file
    text: the content
    logger: the logger to log information and warnings
    """

    folder = directory(os.path.abspath(path))
    make_dir(folder, logger)
    handle, temp_path = tempfile.mkstemp(prefix=f".{name(path)}.", suffix=".tmp", dir=folder)
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        if logger:
            logger.debug(f"Move '{temp_path}' to '{path}' ...")
        os.replace(temp_path, path)
    except OSError:
        delete(temp_path, logger, ignore_error=True)
        raise


def save_json(path: str, data: dict, logger: Logger = None) -> None:
    """Save a dictionary as a json file with sorted keys

    path: the path of the file
    data: the dictionary to save
    logger: the logger to log information and warnings
    """

    save_text(path, json.dumps(data, indent=4, sort_keys=True) + "\n", logger)


def delete(path: str, logger: Logger = None, *, ignore_error: bool = False) -> None:
    """Delete a file"""

    if logger:
        logger.debug(f"Delete file '{path}' ...")

    try:
        os.remove(path)
    except OSError:
        if not ignore_error:
            if logger:
                logger.warning(f"Failed to delete file '{path}'! Raise error ...")
            raise
        if logger:
            logger.info(f"Failed to delete file '{path}'!")


def make_dir(path: str, logger: Logger = None) -> None:
    """Make a directory and its parents"""

    if logger:
        logger.debug(f"Make directory at '{path}' ...")
    os.makedirs(path, exist_ok=True)


def exists(path: str) -> bool:
    """Check file existence"""

    return os.path.exists(path)


def name(path: str) -> str:
    """Get the basename of a path"""

    return os.path.basename(path)


def directory(path: str) -> str:
    """Get the directory of a path"""

    return os.path.dirname(path)


def file_type(path: str) -> str:
    """Get the type of a file"""

    return name(path).split(".")[-1]


def is_file(path: str) -> bool:
    """Is file"""

    return os.path.isfile(path)


def join(dir_path: str, filename: str) -> str:
    """Join a directory path with a filename"""

    return os.path.join(dir_path, filename)
