import sys

from flagpoly.cli import main

sys.exit(main())
