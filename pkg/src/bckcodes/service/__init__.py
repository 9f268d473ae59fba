"""HTTP service wrapping the core package; the CLI drives the same handlers.

The FastAPI app is exposed lazily so that importing the handlers (as the
CLI does) never pays for the web stack.
"""


def __getattr__(name):
    if name == "app":
        from .app import app

        return app
    raise AttributeError(name)
