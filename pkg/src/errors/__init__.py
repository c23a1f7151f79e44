"""Error envelopes and exit statuses."""
