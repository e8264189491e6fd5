"""Composition root that configures dependency injection for the application."""

from lagom import Container, dependency_definition

from mmschemes import KnownRankRegistry

from .app_config import AppConfig
from .services.walk_config_loader import WalkConfigLoader


def init_container(app_config: AppConfig) -> Container:
    """Creates the dependency injection container.

    Args:
        app_config (AppConfig): The application configuration.

    Returns:
        Container: The initialised container. `CommandRunner` and other classes are auto-wired from it.
    """
    container = Container()

    # *** SINGLETON ***
    container[AppConfig] = app_config

    @dependency_definition(container, singleton=True)
    def _get_known_rank_registry() -> KnownRankRegistry:
        return KnownRankRegistry()

    @dependency_definition(container, singleton=True)
    def _get_walk_config_loader() -> WalkConfigLoader:
        return WalkConfigLoader()

    return container
