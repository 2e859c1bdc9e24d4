"""Yang-Baxter operators from cosimplicial monoids, with exact verification."""

from __future__ import annotations

__version__ = "0.1.0"
