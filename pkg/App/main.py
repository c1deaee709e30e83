import logging

from flask import Flask
from rich.console import Console
from rich.logging import RichHandler

from App.config import load_config


def setup_logging(app):
    level = app.config.get("LOG_LEVEL", "INFO")
    logger = logging.getLogger("App")
    logger.setLevel(level)
    if not any(isinstance(handler, RichHandler) for handler in logger.handlers):
        # stdout carries command output, so log records go to stderr
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True))


def create_app(overrides={}):
    app = Flask(__name__)
    load_config(app, overrides)
    setup_logging(app)
    app.app_context().push()
    return app
