"""Points, Möbius maps and moduli coordinates on the projective line."""
