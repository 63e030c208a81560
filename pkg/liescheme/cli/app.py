"""Contains the command line application running the experiments"""

# Standard modules
import argparse
import sys

# Local modules
from ..app import App
from ..constants import EXIT_CONFIG_ERROR, EXIT_HALTED, Experiment
from ..core.errors import ConfigError, InvalidSpacing, LieSchemeError
from .commands import COMMANDS
from .config import ExperimentConfig


class SchemeApp(App):
    """Runs one experiment described by a JSON configuration"""

    def __init__(self, args: list[str] = None) -> None:

        super().__init__(args, description="Invariant difference schemes for third order ODEs")

    # METHODS

    def load_config(self) -> ExperimentConfig:
        """Load the configuration, apply the overrides and check it describes the requested experiment"""
        config = ExperimentConfig(self.options.config, self.logger)
        config.load()
        config.override(self.options.seed, self.options.out)
        experiment = Experiment(self.options.experiment)
        if config.experiment is not experiment:
            raise ConfigError(f"Configuration describes '{config.experiment.value}', not '{experiment.value}'!")
        return config

    # ABSTRACT METHODS

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("experiment", choices=[experiment.value for experiment in Experiment])
        parser.add_argument("--config", required=True, help="path of the JSON experiment configuration")
        parser.add_argument("--out", default=None, help="result file, overrides 'output' of the configuration")
        parser.add_argument("--seed", type=int, default=None, help="random seed, overrides 'seed'")

    def run(self) -> None:
        try:
            config = self.load_config()
            self.logger.info(f"Run experiment '{config.experiment.value}' (config digest {config.digest()[:12]}) ...")
            self.exit_code = COMMANDS[config.experiment](config, self.logger)
        except (ConfigError, InvalidSpacing) as error:
            print(f"error: {error}", file=sys.stderr)
            self.exit_code = EXIT_CONFIG_ERROR
        except LieSchemeError as error:
            self.logger.error(f"Experiment failed: {error}")
            print(f"error: {error}", file=sys.stderr)
            self.exit_code = EXIT_HALTED


def main(args: list[str] = None) -> int:
    """Console entry point, returns the exit code"""
    try:
        app = SchemeApp(args)
    except ConfigError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    return app.start()
