import sys

from magma_forge.main import cli

if __name__ == "__main__":
    sys.exit(cli())
