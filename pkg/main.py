# Main entry point: python main.py <subcommand> [flags]
import sys

from allocgrid.cli import run

if __name__ == "__main__":
    sys.exit(run())
