"""
Reading and writing the numwall configuration.

The configuration is a YAML file of sections holding keys, addressed as
SECTION.KEY. Keys left unset fall back to ``DEFAULTS``.
"""

from collections.abc import MutableMapping
from pathlib import Path
from typing import Dict, Tuple

import yaml
from click import get_app_dir

from .exceptions import InvalidConfigKey

CONFIGURATION_PATH = Path(get_app_dir('numwall')) / 'config.yaml'

DEFAULTS = {
    'wall.integer_max_rows': 32,
    'search.max_period': 12,
    'search.max_nodes': 1000000,
    'render.scale': 1,
}


class Configuration(MutableMapping):

    """
    The configuration file as a mapping of SECTION.KEY strings to values
    """

    def __init__(self, path: Path):
        self.config_path = path

    def __iter__(self):
        for section, keys in self.raw_dict.items():
            for key in keys or {}:
                yield '{}.{}'.format(section, key)

    def __len__(self):
        return sum(1 for _ in self)

    def __getitem__(self, key: str) -> str:
        section, sub_key = self.__split_key(key)
        return self.raw_dict[section][sub_key]

    def __setitem__(self, key: str, value):
        section, sub_key = self.__split_key(key)
        cfg = self.raw_dict
        cfg.setdefault(section, {})[sub_key] = str(value)
        self.__save(cfg)

    def __delitem__(self, key):
        section, sub_key = self.__split_key(key)
        cfg = self.raw_dict
        del cfg[section][sub_key]
        self.__save(cfg)

    def integer(self, key: str) -> int:
        """Value of ``key`` as an integer, the default when unset"""
        value = self.get(key, DEFAULTS.get(key))
        if value is None:
            raise KeyError(key)
        try:
            return int(value)
        except ValueError:
            raise InvalidConfigKey('{} must be an integer, found {!r}'.format(key, value))

    @staticmethod
    def __split_key(key: str) -> Tuple[str, str]:
        try:
            section, sub_key = key.split('.', 1)
        except ValueError:
            raise InvalidConfigKey('key does not contain '
                                   'a section: {}'.format(key))
        return section, sub_key

    def __save(self, cfg):
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with self.config_path.open('w+') as config_file:
            yaml.safe_dump(cfg, config_file,
                           default_flow_style=False)

    @property
    def raw_dict(self) -> Dict[str, Dict[str, str]]:
        """
        The configuration data as stored in config.yaml; an empty or missing
        file reads as no data
        """
        try:
            with self.config_path.open() as config_file:
                cfg = yaml.safe_load(config_file)
        except FileNotFoundError:
            cfg = None
        return cfg or {}


configuration = Configuration(CONFIGURATION_PATH)  # pylint: disable=locally-disabled, invalid-name
