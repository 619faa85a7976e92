import sys

from binomid.cli import main

sys.exit(main())
