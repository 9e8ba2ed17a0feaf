import sys

from agreelab.cli import main

sys.exit(main())
