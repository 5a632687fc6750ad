"""Allow running with python -m schubertkit."""
import sys

from .cli import main

sys.exit(main())
