"""Domain layer: pure computations and the error hierarchy."""
