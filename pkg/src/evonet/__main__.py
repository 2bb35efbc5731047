import sys

from evonet.harness.cli import main

sys.exit(main())
