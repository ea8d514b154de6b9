"""Link-level simulator and analysis toolkit for energy-cooperative NOMA uplinks."""

__version__ = "0.1.0"
