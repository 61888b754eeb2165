import sys

from waterfill.cli import main

sys.exit(main())
