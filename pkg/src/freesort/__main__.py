import sys

from freesort.cli import main

sys.exit(main())
