import sys

from alcove_orbits.cli import main

sys.exit(main())
