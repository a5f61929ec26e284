"""Dense univariate polynomials, gcds, resultants and factorization."""
