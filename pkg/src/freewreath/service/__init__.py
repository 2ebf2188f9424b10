"""FastAPI service wrapping the core operations; the CLI reuses its handlers."""
