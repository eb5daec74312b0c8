import sys

from hermackey.cli import main

sys.exit(main())
