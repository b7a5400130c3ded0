from django.apps import AppConfig


class WorkbenchConfig(AppConfig):
    name = "wdlab.workbench"
    verbose_name = "workbench"
