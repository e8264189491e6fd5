"""The mmflip command-line application."""
