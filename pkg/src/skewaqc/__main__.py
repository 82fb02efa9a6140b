import sys

from skewaqc.cli import main

sys.exit(main())
