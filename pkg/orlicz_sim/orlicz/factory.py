#!/usr/bin/env python3

"""
Orlicz Function Factory
-----------------------
Factory for creating Orlicz functions from kinds, JSON dictionaries and
short command-line specs.
"""

from ..errors import ValidationError
from .base_function import OrliczFunction
from .piecewise_function import PiecewiseOrlicz, from_decreasing_weights
from .power_function import PowerOrlicz


class OrliczFactory:
    """
    Factory class for creating Orlicz functions.

    Kinds: 'piecewise' (breakpoints, tail_slope), 'weights' (weights, scale),
    'power' (p, coefficient) and 'linear' (coefficient).
    """

    @staticmethod
    def create_function(kind, **kwargs):
        """
        Create an Orlicz function of the given kind.

        Args:
            kind (str): One of 'piecewise', 'weights', 'power', 'linear'
            **kwargs: Parameters of that kind

        Returns:
            OrliczFunction: The new function

        Raises:
            ValidationError: If the kind is unknown or parameters are missing
        """
        if not isinstance(kind, str):
            raise ValidationError(f"function kind must be a string, got {kind!r}")
        kind = kind.lower()

        try:
            if kind == 'piecewise':
                return PiecewiseOrlicz(kwargs['breakpoints'], kwargs.get('tail_slope', 'inf'))
            elif kind == 'weights':
                return from_decreasing_weights(kwargs['weights'], kwargs.get('scale', 1.0))
            elif kind == 'power':
                return PowerOrlicz(kwargs['p'], kwargs.get('coefficient', 1.0))
            elif kind == 'linear':
                return PowerOrlicz(1.0, kwargs.get('coefficient', 1.0))
        except KeyError as e:
            raise ValidationError(f"missing parameter {e} for function kind '{kind}'")

        raise ValidationError(f"Unknown function kind: {kind}")

    @staticmethod
    def from_dict(data):
        """Rebuild a function from its to_dict() form; a bare breakpoint dict is piecewise."""
        if not isinstance(data, dict):
            raise ValidationError(f"function description must be an object, got {type(data).__name__}")
        params = dict(data)
        kind = params.pop('kind', 'piecewise' if 'breakpoints' in params else None)
        if kind is None:
            raise ValidationError("function description needs 'kind' or 'breakpoints'")
        return OrliczFactory.create_function(kind, **params)

    @staticmethod
    def from_spec(spec):
        """
        Parse a short command-line spec.

        Examples: 'linear', 'power:2', 'power:2:0.5', 'weights:0.5,0.25,0.25',
        'weights:2,1,1@0.25' (scale after '@').
        """
        head, _, rest = spec.strip().partition(':')
        head = head.lower()
        try:
            if head == 'linear':
                return OrliczFactory.create_function('linear', coefficient=float(rest) if rest else 1.0)
            if head == 'power':
                parts = rest.split(':')
                coefficient = float(parts[1]) if len(parts) > 1 else 1.0
                return OrliczFactory.create_function('power', p=float(parts[0]), coefficient=coefficient)
            if head == 'weights':
                weights, _, scale = rest.partition('@')
                return OrliczFactory.create_function(
                    'weights',
                    weights=[float(w) for w in weights.split(',')],
                    scale=float(scale) if scale else 1.0,
                )
        except ValueError as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError(f"cannot parse function spec '{spec}': {e}")
        raise ValidationError(f"Unknown function spec: {spec}")
