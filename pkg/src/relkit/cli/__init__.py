"""Term language, relation file format, renderer and command line."""
