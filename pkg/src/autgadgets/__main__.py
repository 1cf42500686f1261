"""Entry point for running as module: python -m autgadgets"""
import sys

from autgadgets.main import main

if __name__ == "__main__":
    sys.exit(main())
