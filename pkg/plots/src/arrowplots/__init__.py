"""Figure scripts rendering thermoarrow CSV artifacts to image files."""

__version__ = "0.1.0"
