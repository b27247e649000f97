import argparse
import sys
import typing as th
from pathlib import Path

import yaml

from ranklab.numeric import ScalarParseError, parse_scalar

DEFAULT_CONFIG_PATH = 'config.yaml'


def boolify(s):
    if s in ('True', 'true', 'yes', 'Yes'):
        return True
    if s in ('False', 'false', 'no', 'No'):
        return False
    raise ValueError("cast error")


def intlist(s: str) -> th.List[int]:
    try:
        items = [int(item) for item in s.split(',') if item.strip()]
    except ValueError:
        items = []
    if not items:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {s!r}')
    return items


def scalar_arg(s: str):
    try:
        return parse_scalar(s)
    except ScalarParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def auto_cast(s):
    for fn in (boolify, int, parse_scalar):
        try:
            return fn(s)
        except ValueError:
            pass
    return s


# key=value pairs collected into a dict, values auto-cast
class KeyValue(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, dict())
        for value in values:
            if '=' not in value:
                parser.error(f'{option_string} expects key=value pairs, got {value!r}')
            key, value = value.split('=', 1)
            getattr(namespace, self.dest)[key] = auto_cast(value)


def load_config(path: th.Optional[str] = None) -> dict:
    """YAML config as a dict; the default path may be absent, an explicit one may not."""
    if path is None:
        if not Path(DEFAULT_CONFIG_PATH).is_file():
            return dict()
        path = DEFAULT_CONFIG_PATH
    with open(path, encoding='utf-8') as f:
        try:
            config = yaml.safe_load(f) or dict()
        except yaml.YAMLError as e:
            raise ValueError(f'config {path} is not valid yaml: {e}')
    if not isinstance(config, dict):
        raise ValueError(f'config {path} must hold a mapping at top level')
    return config


def section(config: dict, name: str) -> dict:
    value = config.get(name, None) or dict()
    if not isinstance(value, dict):
        raise ValueError(f'config section {name!r} must be a mapping, got {type(value).__name__}')
    return value


def status(*args, verbose: bool = True):
    # stdout carries results only
    if verbose:
        print(*args, file=sys.stderr)


def as_scalar(value):
    """Scalar from a config/CLI value; YAML floats go through their shortest decimal text."""
    if isinstance(value, bool):
        raise ValueError(f'expected a scalar, got {value!r}')
    if isinstance(value, float):
        return parse_scalar(repr(value))
    if isinstance(value, int):
        return parse_scalar(str(value))
    if isinstance(value, str):
        return parse_scalar(value)
    return value
