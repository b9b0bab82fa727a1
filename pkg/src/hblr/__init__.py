"""hblr: selective natural-language-to-logic translation and hypothesis-driven
backward reasoning over hybrid logic/text contexts, with an evaluation harness."""

__version__ = "0.1.0"
