"""Tests for boundary-scaling."""
