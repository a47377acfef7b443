import contextvars

INVOCATION_ID: contextvars.ContextVar[str] = contextvars.ContextVar("invocation_id", default="-")
