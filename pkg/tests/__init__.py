"""Test package for simpdim."""
