import time
from argparse import ArgumentParser

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from rest_framework.exceptions import ValidationError

from wdlab.enumeration.exceptions import BudgetExceeded
from wdlab.lattices.exceptions import WorkbenchError
from wdlab.workbench.config import DICOMPLEMENTATIONS
from wdlab.workbench.config import JSON
from wdlab.workbench.config import LATTICES
from wdlab.workbench.config import OPS
from wdlab.workbench.config import TEXT
from wdlab.workbench.config import RunConfig
from wdlab.workbench.runner import BAD_INPUT
from wdlab.workbench.runner import Outcome
from wdlab.workbench.runner import exit_code_for
from wdlab.workbench.runner import first_error
from wdlab.workbench.runner import run


class Command(BaseCommand):
    help = (
        "Finite-model workbench for weakly dicomplemented lattices. "
        "Exit codes: 0 pass/exhausted, 1 an axiom fails, 2 bad input, 3 internal "
        "cross-check failure, 4 over budget or size bound, 10 counterexample found."
    )

    def add_arguments(self, parser: ArgumentParser) -> None:
        commands = parser.add_subparsers(dest="command", required=True)

        check = commands.add_parser("check", help="check axioms on an algebra JSON file")
        check.add_argument("path", help="algebra JSON")
        check.add_argument("--axioms", help="comma-separated axiom identifiers (default: all that apply)")
        check.add_argument(
            "--congruences",
            action="store_true",
            help="also list the congruences and decide subdirect irreducibility",
        )

        recognize = commands.add_parser("recognize", help="decide Booleanness by the single axiom")
        recognize.add_argument("path", help="lattice JSON")

        enumerate_ = commands.add_parser("enumerate", help="enumerate lattices or unary tables")
        enumerate_.add_argument("--what", choices=(LATTICES, OPS, DICOMPLEMENTATIONS), default=LATTICES)
        enumerate_.add_argument("--max-n", dest="max_n", type=int)
        enumerate_.add_argument("--axioms")
        enumerate_.add_argument("--slots", choices=("weak", "dual", "pair"), default="weak")
        enumerate_.add_argument("--lattice", dest="path", help="lattice JSON (default: every lattice up to --max-n)")

        search = commands.add_parser("search", help="do A3 and A3' force A1, A2, A1' and A2'?")
        search.add_argument("--max-n", dest="max_n", type=int, required=True)
        search.add_argument("--require-wdn", dest="require_wdn", action="store_true")
        search.add_argument("--workers", type=int, default=1)
        search.add_argument("--timing", action="store_true", help="add elapsed_ms to the report")

        fca = commands.add_parser("fca", help="build the concept algebra of a Burmeister .cxt file")
        fca.add_argument("path", help=".cxt file")
        fca.add_argument("--out-dir", dest="out_dir")

        for sub in (check, recognize, enumerate_, search, fca):
            sub.add_argument("--format", choices=(TEXT, JSON), default=JSON)
            sub.add_argument("--budget", type=int)

    def _emit(self, outcome: Outcome, fmt: str) -> None:
        self.stdout.write(outcome.render(fmt))

    def handle(self, *args, **options) -> None:
        started = time.perf_counter()
        try:
            config = RunConfig.from_options(options)
        except ValidationError as error:
            raise CommandError(first_error(error.detail), returncode=BAD_INPUT) from error
        try:
            outcome = run(config)
        except ValidationError as error:
            raise CommandError(first_error(error.detail), returncode=BAD_INPUT) from error
        except BudgetExceeded as error:
            if error.partial is not None:
                self.stdout.write(Outcome(0, error.partial.to_json()).render(JSON))
            raise CommandError(str(error), returncode=exit_code_for(error)) from error
        except WorkbenchError as error:
            raise CommandError(str(error), returncode=exit_code_for(error)) from error
        self._emit(outcome, config.format)
        if options["verbosity"] > 1:
            self.stderr.write(f"{config.command} finished in {time.perf_counter() - started:.2f}s")
        if outcome.code:
            raise SystemExit(outcome.code)
