"""CLI package for apps."""
