"""Instance formats: canonical text, DIMACS STP import and random G(n, p)."""

from pathlib import Path

from errors import FormatError
from formats.canonical import parse_canonical, write_canonical
from formats.gnp import Gaussian, Uniform, generate_gnp, parse_distribution
from formats.stp import StpMode, import_stp
from instance import Instance

FORMATS = ("canonical", "mwcs", "gmwcs")

__all__ = [
    "FORMATS",
    "Gaussian",
    "StpMode",
    "Uniform",
    "generate_gnp",
    "guess_format",
    "import_stp",
    "parse_canonical",
    "parse_distribution",
    "read_instance",
    "write_canonical",
]


def guess_format(path: Path, stp_mode: str = "mwcs") -> str:
    """Infer the format from the file extension (``.stp`` → STP, otherwise canonical)."""
    return stp_mode if path.suffix.lower() == ".stp" else "canonical"


def read_instance(path: Path, fmt: str) -> Instance:
    """Read an instance file.

    Args:
        path: File to read.
        fmt: One of ``canonical``, ``mwcs``, ``gmwcs``.

    Returns:
        Instance named after the file stem.

    Raises:
        FormatError: Unknown format or unparsable file.
        OSError: File cannot be read.
    """
    if fmt not in FORMATS:
        raise FormatError(f"unknown format '{fmt}'. Must be one of: {', '.join(FORMATS)}")

    data = Path(path).read_bytes()
    if fmt == "canonical":
        return parse_canonical(data, name=path.stem)
    return import_stp(data, StpMode(fmt), name=path.stem)
