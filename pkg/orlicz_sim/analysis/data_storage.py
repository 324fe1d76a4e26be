#!/usr/bin/env python3

"""
Data Storage Module
-------------------
Functions for saving and loading instances, spaces and reports.
"""

import json
import os
from typing import Any, Dict

import numpy as np

from ..errors import ValidationError
from ..musielak import MusielakSpace


class NumpyEncoder(json.JSONEncoder):
    """Custom JSON encoder for numpy types."""
    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        return json.JSONEncoder.default(self, obj)


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(parent):
        os.makedirs(parent)


def save_json(data: Dict[str, Any], path: str, indent: int = 2) -> str:
    """
    Write a dictionary as JSON.

    Args:
        data (dict): JSON-compatible data (numpy values allowed)
        path (str): Output file
        indent (int): Indentation

    Returns:
        str: The path written
    """
    _ensure_parent(path)
    with open(path, 'w') as f:
        json.dump(data, f, cls=NumpyEncoder, indent=indent)
        f.write("\n")
    return path


def load_json(path: str) -> Dict[str, Any]:
    """
    Read a JSON object from disk.

    Raises:
        ValidationError: If the file is missing or not a JSON object
    """
    if not os.path.exists(path):
        raise ValidationError(f"file not found: {path}")
    with open(path, 'r') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ValidationError(f"{path} must contain a JSON object")
    return data


def save_space(space: MusielakSpace, path: str) -> str:
    return save_json(space.to_dict(), path)


def load_space(path: str) -> MusielakSpace:
    return MusielakSpace.from_dict(load_json(path))
