"""Tests for vague-membership."""
