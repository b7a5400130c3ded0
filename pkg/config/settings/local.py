from .base import *  # noqa: F403
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
DEBUG = True
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="wdlab-local-Hc2uYw8NqT5rLx0bVe3mKs7dGa1pZf6jRo4iUn9tQyXWlEhBvCkM",
)

# Celery
# ------------------------------------------------------------------------------
# Without a broker every partition runs in the calling process.
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=True)
CELERY_TASK_EAGER_PROPAGATES = True
