"""Neuroevolution toolkit: three genome encodings, gradient and annealing
trainers, temperature-scaled variation and a reproducible generation loop."""

__version__ = "0.1.0"
