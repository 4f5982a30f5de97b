import sys

from sigma_lab.cli import main


sys.exit(main())
