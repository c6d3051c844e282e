import sys

from icnoma.cli.main import main

sys.exit(main())
