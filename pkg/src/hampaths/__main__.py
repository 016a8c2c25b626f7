import sys

from hampaths.cli import main

sys.exit(main())
