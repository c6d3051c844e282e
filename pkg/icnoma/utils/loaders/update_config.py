from pathlib import Path
from typing import Union, Callable

from icnoma.config.MetaConfig import MetaConfig
from icnoma.utils.utils import update_recursive


def get_config_updater(config_loader: Callable) -> Callable:
    def _update_config(config: Union[dict, str, Path], merge: bool = True):
        """
        Install a new configuration. With `merge`, keys missing from `config`
        keep their current values.
        """
        config = config_loader(config)
        if merge:
            config = update_recursive(MetaConfig.CONFIG, config)
        MetaConfig.CONFIG = config

    return _update_config


def get_current_config() -> dict:
    return MetaConfig.CONFIG
