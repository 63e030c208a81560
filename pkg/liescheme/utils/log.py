"""Interface for standard module logging"""

# Standard modules
import logging
import os
import sys
from typing import Optional

# Local modules
from . import file


def setup_log_directory(path: str, file_limit: int = 10) -> None:
    """Make the log directory and delete the oldest log files

    path: the log directory path
    file_limit: how many old log files to keep
    """

    # Make the directory
    file.make_dir(path)

    # Delete old log files, the names sort by creation date
    log_files = sorted(entry for entry in os.listdir(path)
                       if file.is_file(file.join(path, entry)) and file.file_type(entry) == "log")
    for entry in log_files[:max(0, len(log_files) - file_limit)]:
        file.delete(file.join(path, entry))


def create_logger(path: Optional[str], name: str, level: int, *, log_date: bool = True,
                  log_thread: bool = False) -> logging.Logger:
    """Create the logger

    path: the log file path, None logs to the console only
    name: the name of the logger
    level: the minimum level of the logs to show
    log_date: show the date
    log_thread: show the thread name
    """

    # Define format
    log_format = logging.Formatter(f"[%(asctime)s] [%(name)s{' - %(threadName)s' if log_thread else ''}] [%(levelname)s] %(message)s",
                                   datefmt='%d/%b/%y %H:%M:%S' if log_date else '%H:%M:%S')

    # Create logger, the console handler keeps stdout free for results
    logger = logging.Logger(name, level)
    log_handler_console = logging.StreamHandler(sys.stderr)
    log_handler_console.setFormatter(log_format)
    logger.addHandler(log_handler_console)
    if path is not None:
        log_handler_file = logging.FileHandler(path, encoding="utf-8")
        log_handler_file.setFormatter(log_format)
        logger.addHandler(log_handler_file)

    # Return logger
    return logger
