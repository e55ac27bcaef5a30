"""Tests for Steiner Toolkit."""
