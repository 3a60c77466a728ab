"""JSON schemas for the command-line output, one file per output kind."""

import json
from importlib.resources import files


def load(name: str) -> dict:
    return json.loads(files(__name__).joinpath(f"{name}.schema.json").read_text())
