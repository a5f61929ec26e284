"""The Weierstrass family x^3 = y^2 - t*y."""
