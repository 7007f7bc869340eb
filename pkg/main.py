# main.py
import sys

from kohomologi.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
