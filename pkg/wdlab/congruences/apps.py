from django.apps import AppConfig


class CongruencesConfig(AppConfig):
    name = "wdlab.congruences"
    verbose_name = "congruences"
