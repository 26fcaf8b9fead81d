"""Mixins for Runs App."""

import logging

from django.core.management.base import CommandError

from apps.utils.exceptions import SimulationError

from .exceptions import ConfigError
from .exceptions import OutputPathError
from .loaders import load_config

logger = logging.getLogger(__name__)

CONFIG_EXIT_CODE = 2
SIMULATION_EXIT_CODE = 3


class RunCommandMixin:
    """Shared options and exit codes of the simulation commands.

    Subclasses set ``service`` to the function taking a ``RunConfig``.
    """

    service = None

    def add_arguments(self, parser):
        parser.add_argument("--config", required=True, help="YAML run configuration")
        parser.add_argument("--output", help="Override output_path")
        parser.add_argument("--workers", type=int, help="Override workers")
        parser.add_argument("--seed", type=int, help="Override seed")

    def handle(self, *args, **options):
        try:
            config = load_config(options["config"]).with_overrides(
                output_path=options.get("output"),
                workers=options.get("workers"),
                seed=options.get("seed"),
            )
            result = type(self).service(config)
        except (ConfigError, OutputPathError) as exc:
            raise CommandError(str(exc), returncode=CONFIG_EXIT_CODE) from exc
        except SimulationError as exc:
            logger.error("Run failed: %s", exc)
            raise CommandError(str(exc), returncode=SIMULATION_EXIT_CODE) from exc
        self.stdout.write(self.style.SUCCESS(result.message))
