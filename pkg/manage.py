#!/usr/bin/env python
"""Django's command-line utility; `python manage.py wdl --help` lists the workbench commands."""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    try:
        from django.core.management import execute_from_command_line  # noqa: PLC0415
    except ImportError as exc:
        raise ImportError(  # noqa: TRY003
            "Couldn't import Django. Is it installed and on PYTHONPATH? "  # noqa: EM101
            "Try `uv sync` first.",
        ) from exc

    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
