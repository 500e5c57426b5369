"""coherence-lab: relative-entropy coherence, maximally coherent states and
the incoherent operations that preserve them."""

__version__ = "0.1.0"
