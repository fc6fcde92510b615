"""Entry point for `python -m symbolique`."""

import sys

from symbolique.cli import main

sys.exit(main())
