"""Allow running the package directly with python -m bamkit."""

from bamkit.cli import main

if __name__ == "__main__":
    main()
