import sys

from centralfiring.cli import main

sys.exit(main())
