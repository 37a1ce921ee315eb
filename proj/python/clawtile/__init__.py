"""Python interface to the clawtile finite-volume engine.

A :class:`Session` wraps one engine-side simulation. State crosses the
boundary by copy; arrays are shaped ``(num_states, [nz,] ny, nx)``.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from typing import Any, Union

import numpy as np

from . import _core
from ._core import ConfigError, SessionBusy, SessionClosed

__all__ = [
    "ConfigError",
    "NumericalBlowup",
    "Session",
    "SessionBusy",
    "SessionClosed",
    "config_text",
]

NumericalBlowup = _core.NumericalError

Initial = Union[np.ndarray, Callable[..., Any], None]


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, np.ndarray)):
        return " ".join(_format_value(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def config_text(config: Union[str, Mapping[str, Mapping[str, Any]]]) -> str:
    """Renders a ``{section: {key: value}}`` mapping in the engine's config format."""
    if isinstance(config, str):
        return config
    lines = []
    for section, entries in config.items():
        if not isinstance(entries, Mapping):
            raise ConfigError(f"section '{section}' must map keys to values")
        lines.append(f"[{section}]")
        for key, value in entries.items():
            lines.append(f"{key} = {_format_value(value)}")
        lines.append("")
    return "\n".join(lines)


class Session:
    """One engine-side simulation.

    ``initial`` overrides the configured initial condition, either as an
    array of shape ``(num_states, [nz,] ny, nx)`` or as a callable taking the
    cell-center coordinate arrays ``(x, [y, [z]])`` and returning
    ``num_states`` arrays of the grid shape.
    """

    def __init__(self, config, initial: Initial = None):
        self._text = config_text(config)
        self._engine = _core.Engine(self._text)
        self.ndim, cells, self.num_states = self._engine.shape()
        self.cells = tuple(cells)
        self.lower, self.upper = self._engine.bounds()
        if initial is not None:
            self.set_state(self._evaluate(initial) if callable(initial) else initial)

    @property
    def grid_shape(self) -> tuple:
        """Interior shape with the slowest axis first."""
        return tuple(reversed(self.cells))

    @property
    def shape(self) -> tuple:
        return (self.num_states, *self.grid_shape)

    def centers(self) -> list:
        """Cell-center coordinates per axis (x first), as broadcastable arrays."""
        axes = []
        for a in range(self.ndim):
            dx = (self.upper[a] - self.lower[a]) / self.cells[a]
            axes.append(self.lower[a] + (np.arange(self.cells[a]) + 0.5) * dx)
        grids = np.meshgrid(*reversed(axes), indexing="ij")
        return list(reversed(grids))

    def _evaluate(self, fn: Callable[..., Any]) -> np.ndarray:
        values = fn(*self.centers())
        return np.stack([np.broadcast_to(np.asarray(v, dtype=np.float64), self.grid_shape)
                         for v in values])

    def set_state(self, values) -> None:
        arr = np.asarray(values, dtype=np.float64)
        if arr.shape != self.shape:
            names = ", ".join(["num_states", *"nz ny nx".split()[3 - self.ndim:]])
            raise ValueError(f"state has shape {arr.shape}; expected ({names}) = {self.shape}")
        self._engine.set_state(np.ascontiguousarray(arr).ravel())

    def evolve(self, t_target: float) -> dict:
        """Advances to ``t_target``; returns steps, reverts, time and cfl_max."""
        return self._engine.evolve(float(t_target))

    def state(self) -> tuple:
        """Returns ``(arrays, time)`` with arrays shaped like :attr:`shape`."""
        flat, t = self._engine.state()
        return flat.reshape(self.shape), t

    @property
    def time(self) -> float:
        return self.state()[1]

    def close(self) -> None:
        self._engine.close()

    def __enter__(self) -> "Session":
        return self

    def __exit__(self, *exc) -> None:
        try:
            self.close()
        except SessionClosed:
            pass
