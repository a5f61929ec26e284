"""Core algebra for triple-only covers of the projective line."""

