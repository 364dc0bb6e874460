"""Allow ``python -m boolechar``."""

from boolechar.cli import main

raise SystemExit(main())
