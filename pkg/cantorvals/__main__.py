# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

import sys

from cantorvals.cli import main

sys.exit(main())
