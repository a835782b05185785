"""Exact computations with braid moperads, chord diagrams and associators."""
