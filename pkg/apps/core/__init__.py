"""Core domain logic for apps."""
