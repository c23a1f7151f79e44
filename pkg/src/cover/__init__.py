"""Cover data model and validation."""
