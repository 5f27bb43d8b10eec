# Test package for config module
