"""Shared configuration, constants and grid profiles."""
