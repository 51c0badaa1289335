from .app import create_app
from .sessions import SessionError, SessionRecord, SessionStore

__all__ = ["SessionError", "SessionRecord", "SessionStore", "create_app"]
