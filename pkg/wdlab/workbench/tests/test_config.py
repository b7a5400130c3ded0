import pytest
from rest_framework.exceptions import ValidationError

from wdlab.algebras.serializers import load_algebra
from wdlab.workbench.config import RunConfig
from wdlab.workbench.runner import first_error


def test_search_options():
    config = RunConfig.from_options({"command": "search", "max_n": 4, "workers": 2, "verbosity": 1})
    assert config.max_n == 4
    assert config.workers == 2
    assert config.format == "json"
    assert not config.require_wdn


def test_axioms_are_parsed():
    config = RunConfig.from_options({"command": "check", "path": "a.json", "axioms": "A3,DDAG"})
    assert config.axioms is not None
    assert config.axioms.ordered == ("A3", "DDAG")


@pytest.mark.parametrize(
    ("options", "field"),
    [
        ({"command": "search", "max_n": 99}, "max_n"),
        ({"command": "search"}, "max_n"),
        ({"command": "search", "max_n": 3, "workers": 0}, "workers"),
        ({"command": "check", "path": "a.json", "axioms": "A1,A7"}, "axioms"),
        ({"command": "check"}, "path"),
        ({"command": "enumerate", "what": "ops", "max_n": 3}, "axioms"),
        ({"command": "enumerate", "what": "lattices"}, "max_n"),
        ({"command": "draw"}, "command"),
    ],
)
def test_rejected_options(options, field):
    with pytest.raises(ValidationError) as excinfo:
        RunConfig.from_options(options)
    assert first_error(excinfo.value.detail).startswith(field)


def test_first_error_names_the_nested_field():
    document = {"lattice": {"n": 2, "covers": [[0, 2]]}, "weak": [1, 0]}
    with pytest.raises(ValidationError) as excinfo:
        load_algebra(document)
    assert first_error(excinfo.value.detail).startswith("lattice.covers: ")


def test_runs_without_a_database(settings):
    assert not [app for app in settings.INSTALLED_APPS if app.startswith("django.contrib")]
    engines = {alias: db.get("ENGINE") for alias, db in settings.DATABASES.items()}
    assert engines in ({}, {"default": "django.db.backends.dummy"})
