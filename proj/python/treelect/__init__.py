"""Leader election with advice in anonymous port-labelled trees."""

import json as _json

from ._treelect import *  # noqa: F401,F403
from ._treelect import elect as _elect
from ._treelect import xi_json as _xi_json


def elect_outcome(tree, scheme, tau=None):
    """Run a scheme and return the outcome as a dict."""
    return _json.loads(_elect(tree, scheme, tau))


def xi_record(tree):
    return _json.loads(_xi_json(tree))
