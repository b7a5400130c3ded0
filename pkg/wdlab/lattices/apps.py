from django.apps import AppConfig


class LatticesConfig(AppConfig):
    name = "wdlab.lattices"
    verbose_name = "lattices"
