"""Constructions of triple-only and power-reduced covers."""
