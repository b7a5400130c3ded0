from django.apps import AppConfig


class ConceptsConfig(AppConfig):
    name = "wdlab.concepts"
    verbose_name = "concept algebras"
