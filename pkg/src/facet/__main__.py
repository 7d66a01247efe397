"""Allow `python -m facet` as an alias for the facet console script."""

from facet.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
