import sys

from amcmpy.cli import main

sys.exit(main())
