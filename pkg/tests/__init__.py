"""Test suite for X Bookmarks to Raindrop.io sync tool."""
