"""Field descriptors: Q, prime fields, extension towers and function fields."""
