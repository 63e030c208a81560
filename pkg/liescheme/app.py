"""Contains the main class of command line applications"""

# Standard modules
import argparse
import logging
import os
import sys

# Local modules
from .constants import EXIT_SUCCESS, VERSION
from .core.errors import ConfigError
from .utils import file
from .utils import log
from .utils import time


class StrictArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors as configuration errors instead of exiting"""

    def error(self, message: str) -> None:
        raise ConfigError(f"{self.prog}: {message}")


class App:
    """Main class of a command line application"""

    _initialized = False

    def __init__(self, args: list[str] = None, *, name: str = "liescheme", version: str = VERSION,
                 description: str = "An application of the liescheme library") -> None:

        # General information
        self.args: list[str] = list(sys.argv[1:] if args is None else args)
        self.name: str = name
        self.version: str = version
        self.description: str = description

        # Parse arguments
        parser = StrictArgumentParser(prog=name, description=description)
        parser.add_argument("-d", "--debug", action="store_true", help="log debug messages")
        parser.add_argument("--log-dir", default=None, help="also write a log file into this directory")
        self.add_arguments(parser)
        self.options: argparse.Namespace = parser.parse_args(self.args)
        self.debug: bool = self.options.debug
        self.log_path: str = self.options.log_dir
        self.log_file: str = file.join(self.log_path, f"log_{time.datetime_f_ymd_hms()}.log") if self.log_path else None

        # Exit information
        self.exit_code: int = EXIT_SUCCESS

        # Setup logging
        if self.log_path:
            log.setup_log_directory(self.log_path)
        self.logger: logging.Logger = log.create_logger(self.log_file, self.name.upper(),
                                                        logging.DEBUG if self.debug else logging.INFO)

        # Log runtime information
        self.logger.debug(f"Version: {self.version}")
        self.logger.debug(f"Run Path: {os.path.abspath('.')}")

        # Set initialized flag
        self._initialized: bool = True

    # METHODS

    def start(self) -> int:
        """Start the application

        Returns the exit code
        """

        # Check for initialization
        assert self._initialized, "Application was not initialized!"

        # Run application
        self.logger.debug("Start application ...")
        self.run()

        # Shutdown tasks
        self.logger.debug("Quit application ...")
        self.quit()
        return self.exit_code

    # ABSTRACT METHODS

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the application's arguments to the parser

        Called on initialization -
        Don't call this method manually
        """

        pass

    def run(self) -> None:
        """Application execution

        Called on starting -
        Don't call this method manually
        """

        pass

    def quit(self) -> None:
        """Shutdown tasks

        Called before exiting -
        Don't call this method manually
        """

        pass
