from django.apps import AppConfig


class EnumerationConfig(AppConfig):
    name = "wdlab.enumeration"
    verbose_name = "exhaustive enumeration"
