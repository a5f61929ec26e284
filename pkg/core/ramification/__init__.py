"""Rational maps and their ramification."""
