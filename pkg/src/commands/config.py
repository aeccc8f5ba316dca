"""Config command - manage wcm configuration."""

import argparse
import sys

from config import CONFIG_FILE, load_config, save_config
from config.defaults import DEFAULT_CONFIG


def register(subparsers: argparse._SubParsersAction) -> None:
    """Register the config command."""
    parser = subparsers.add_parser(
        "config",
        help="Manage configuration",
        description="Manage wcm configuration settings",
    )
    config_subparsers = parser.add_subparsers(dest="config_action", help="Config actions")

    # config set
    set_parser = config_subparsers.add_parser(
        "set",
        help="Set a configuration value",
        description="Set a configuration value",
    )
    set_parser.add_argument("key", help="Configuration key (e.g., 'solver.time_limit')")
    set_parser.add_argument("value", help="Configuration value")
    set_parser.set_defaults(func=run_set)

    # config get
    get_parser = config_subparsers.add_parser(
        "get",
        help="Get a configuration value",
        description="Get a configuration value",
    )
    get_parser.add_argument("key", help="Configuration key (e.g., 'solver.formulation')")
    get_parser.set_defaults(func=run_get)

    # config list
    list_parser = config_subparsers.add_parser(
        "list",
        help="List all configuration",
        description="List all configuration settings",
    )
    list_parser.set_defaults(func=run_list)

    # config path
    path_parser = config_subparsers.add_parser(
        "path",
        help="Show config file path",
        description="Show configuration file path",
    )
    path_parser.set_defaults(func=run_path)

    # Default to showing help if no subcommand
    parser.set_defaults(func=lambda args: parser.print_help() or 1)


def _config_path(args: argparse.Namespace):
    return args.config if hasattr(args, "config") else None


def _split_key(key: str) -> tuple[str, str] | None:
    section, _, name = key.lower().partition(".")
    if section in DEFAULT_CONFIG and name in DEFAULT_CONFIG[section]:
        return section, name
    return None


def _coerce(raw: str, default):
    """Parse a command-line value into the type of the default."""
    if isinstance(default, bool):
        lowered = raw.lower()
        if lowered in ("true", "yes", "1", "on"):
            return True
        if lowered in ("false", "no", "0", "off"):
            return False
        raise ValueError(f"expected a boolean, got '{raw}'")
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, float):
        return float(raw)
    return raw


def _known_keys() -> str:
    return ", ".join(f"{section}.{name}" for section, values in DEFAULT_CONFIG.items() for name in values)


def run_set(args: argparse.Namespace) -> int:
    """Set a configuration value."""
    target = _split_key(args.key)
    if target is None:
        print(f"Error: Unknown config key '{args.key}'. Known keys: {_known_keys()}", file=sys.stderr)
        return 1
    section, name = target

    try:
        value = _coerce(args.value, DEFAULT_CONFIG[section][name])
    except ValueError as e:
        print(f"Error: Invalid value for {section}.{name}: {e}", file=sys.stderr)
        return 1

    config = load_config(_config_path(args))
    config[section][name] = value
    try:
        save_config(config, _config_path(args))
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    print(f"✓ {section}.{name} set to: {value}")
    return 0


def run_get(args: argparse.Namespace) -> int:
    """Get a configuration value."""
    target = _split_key(args.key)
    if target is None:
        print(f"Error: Unknown config key '{args.key}'. Known keys: {_known_keys()}", file=sys.stderr)
        return 1
    section, name = target

    config = load_config(_config_path(args))
    print(config[section][name])
    return 0


def run_list(args: argparse.Namespace) -> int:
    """List all configuration."""
    config = load_config(_config_path(args))

    print("Configuration:")
    print()
    for section, values in config.items():
        print(f"  [{section}]")
        for name, value in values.items():
            shown = repr(value) if isinstance(value, str) else value
            print(f"    {name} = {shown}")
        print()

    return 0


def run_path(args: argparse.Namespace) -> int:
    """Show config file path."""
    if hasattr(args, "config") and args.config:
        config_path = args.config
    else:
        config_path = CONFIG_FILE
    print(config_path)
    return 0
