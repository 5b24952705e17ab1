import sys

from nfakit.cli import main

sys.exit(main())
