"""`wcm help` command."""

from __future__ import annotations

import argparse

FORMATS_TOPIC = """Instance formats:

  canonical (*.wcm)
    wcm <n> <m>
    e <u> <v> <weight>        one line per edge, vertices 0..n-1
    Lines starting with '#' and blank lines are ignored.

  mwcs (*.stp, default for .stp)
    DIMACS STP file; node weights from the Terminals/NodeWeights
    section, edge weight = sum of its endpoint weights.

  gmwcs (*.stp with --format gmwcs)
    DIMACS STP file; edge weights taken from the edge records.
"""

TOPICS = {"formats": FORMATS_TOPIC}


def register(subparsers, parser_ref: argparse.ArgumentParser) -> None:
    """Register the help subcommand.

    Args:
        subparsers: The subparsers object to add to.
        parser_ref: Reference to the main parser for displaying help.
    """
    p = subparsers.add_parser(
        "help",
        help="Show help for a command or topic",
        add_help=False,
    )
    p.add_argument("command", nargs="?", help="Command or topic (formats)")
    p.set_defaults(func=lambda args: run(args, parser_ref))


def _commands(parser: argparse.ArgumentParser) -> dict[str, argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return dict(action.choices)
    return {}


def _summaries(parser: argparse.ArgumentParser) -> list[tuple[str, str]]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return [(choice.dest, choice.help or "") for choice in action._choices_actions]
    return []


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Show help for a command, a topic, or the command overview."""
    commands = _commands(parser)

    if not args.command:
        print(parser.format_usage().rstrip())
        print()
        print("Available commands:")
        for name, summary in _summaries(parser):
            print(f"  {name:<8} {summary}")
        print()
        print(f"Topics: {', '.join(sorted(TOPICS))}")
        print("Run 'wcm help <command>' for the options of one command.")
        return 0

    if args.command in TOPICS:
        print(TOPICS[args.command], end="")
        return 0

    if args.command in commands:
        commands[args.command].print_help()
        return 0

    print(f"Unknown command: {args.command}")
    print(f"\nAvailable commands: {', '.join(sorted(commands))}")
    return 1
