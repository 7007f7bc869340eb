from .app import App, build_parser, main

__all__ = ["App", "build_parser", "main"]
