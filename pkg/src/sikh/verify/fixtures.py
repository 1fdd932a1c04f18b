"""Access to the packaged fixture diagrams (``sikh/data/fixtures``)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, List

from ..diagram import Diagram, loads


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    file: str
    punctures: int
    crossings: int
    components: int
    embedded_knot: bool


@dataclass(frozen=True)
class MovePair:
    move: str
    left: str
    right: str


def _dir():
    return resources.files("sikh") / "data" / "fixtures"


@lru_cache(maxsize=None)
def _catalog() -> dict:
    return json.loads((_dir() / "catalog.json").read_text(encoding="utf-8"))


def fixtures() -> Dict[str, FixtureInfo]:
    return {name: FixtureInfo(name, **info) for name, info in _catalog()["fixtures"].items()}


def move_pairs() -> List[MovePair]:
    return [MovePair(**p) for p in _catalog()["pairs"]]


def fixture_path(name: str):
    return _dir() / fixtures()[name].file


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Diagram:
    return loads(fixture_path(name).read_text(encoding="utf-8"))
