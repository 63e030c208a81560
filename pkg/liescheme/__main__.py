"""Run the command line application with python -m liescheme"""

# Standard modules
import sys

# Local modules
from .cli.app import main


sys.exit(main())
