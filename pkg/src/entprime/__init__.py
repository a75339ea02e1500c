"""Prime identification from the Fourier amplitudes of entanglement dynamics."""

__version__ = "0.1.0"
