from ._walk_config_loader import WalkConfigLoader

__all__ = ["WalkConfigLoader"]
