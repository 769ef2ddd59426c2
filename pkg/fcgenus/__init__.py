"""Maximum genus and upper-embeddability of multigraphs through fundamental cycles."""

__version__ = "0.1.0"
