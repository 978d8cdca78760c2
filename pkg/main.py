"""
Sinc-collocation KdV / KdV-Burgers solver
Main entry point for the command line
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.runner import main


if __name__ == "__main__":
    sys.exit(main())
