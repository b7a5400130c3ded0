from django.apps import AppConfig


class AlgebrasConfig(AppConfig):
    name = "wdlab.algebras"
    verbose_name = "dicomplemented algebras"
