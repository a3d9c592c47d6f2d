"""Initialize the command-line subpackage."""
