import sys

from hkcones.cli import main

sys.exit(main())
