import sys

from wreathmac.cli import main

sys.exit(main())
