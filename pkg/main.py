import sys

from cli.cli import run


def main():
    """Main entry point for the application."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
