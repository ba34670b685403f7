import sys

from pqrs.cli import main

sys.exit(main())
