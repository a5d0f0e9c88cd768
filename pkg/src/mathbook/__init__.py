"""mathbook package."""
