#!/usr/bin/env python3
"""Run the three bundled example structures end to end."""

from ualg.cli import main

for name in ("list", "monoid", "bool"):
    print(f"== {name} ==")
    main(["examples", name])
    print()
