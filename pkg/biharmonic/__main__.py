import sys

from biharmonic.cli.main import main

sys.exit(main())
