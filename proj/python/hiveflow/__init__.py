"""Littlewood-Richardson positivity via hive flows."""

import json

from ._core import CapExceeded, count, lr_count, multiplicity_free, render
from ._core import decide_json as _decide_json
from ._core import render_flow_json as _render_flow_json

__all__ = ["CapExceeded", "count", "decide", "lr_count", "multiplicity_free", "render", "render_flow"]


def decide(lam, mu, nu, algorithm="scaling"):
    """Solver report as a dict; same layout as `hiveflow decide`."""
    return json.loads(_decide_json(list(lam), list(mu), list(nu), algorithm))


def render_flow(flow, format="dot"):
    """Render a flow map or a decide report."""
    return _render_flow_json(json.dumps(flow), format)
