import sys

from dephasing_battery.cli import main

sys.exit(main())
