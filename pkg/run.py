import sys

from bockstein import main

if __name__ == "__main__":
    sys.exit(main())
