import sys

from gnbmul.cli import main

sys.exit(main())
