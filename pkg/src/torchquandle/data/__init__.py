"""Bundled quandle tables and link corpus."""
