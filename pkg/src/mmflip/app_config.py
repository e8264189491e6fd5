"""Configuration for the application."""

import environ


@environ.config(prefix="MMFLIP")
class AppConfig:
    """Configuration for the application."""

    max_workers: int = environ.var(
        0, converter=int, help="The number of worker processes for parallel walks; 0 uses one per CPU.",
    )
    checkpoint_every: int = environ.var(
        1000, converter=int, help="The default number of walk steps between certifications of the best scheme.",
    )
    evalcheck_trials: int = environ.var(
        100, converter=int, help="The default number of random instances for `evalcheck`.",
    )

    @environ.config
    class LoggingConfig:
        """Configuration for logging to stderr and, optionally, a log file."""

        levels: str = environ.var(":WARNING", help="Logger levels as 'name:LEVEL,...'; an empty name is the root.")
        location: str = environ.var("", help="The directory for the log file; empty disables file logging.")

    logging: LoggingConfig = environ.group(LoggingConfig)
