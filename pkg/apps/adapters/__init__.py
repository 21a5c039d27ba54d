"""Adapter implementations for apps."""
