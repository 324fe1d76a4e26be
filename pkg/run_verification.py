#!/usr/bin/env python3

"""
Musielak-Orlicz Verification
----------------------------
Main entry point for generating instances and verifying norm inequalities.
"""

import sys

from orlicz_sim.interfaces.cli import main

if __name__ == "__main__":
    sys.exit(main())
