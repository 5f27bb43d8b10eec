# Test package root
