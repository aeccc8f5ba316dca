"""Command modules for the wcm CLI.

Each command module exposes:
- register(subparsers): attach argparse parsers
- run(args): execute command
"""
