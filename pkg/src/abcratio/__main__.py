import sys

from abcratio.cli import main

sys.exit(main())
