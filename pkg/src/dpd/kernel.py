"""Backend selection for the search kernel.

The compiled core is used when it imports; ``DPD_KERNEL=python`` forces the
pure-Python fallback.  Both expose the same ``Kernel`` class.
"""

from __future__ import annotations

import os

from . import _pycore

if os.environ.get("DPD_KERNEL", "").lower() == "python":
    Kernel = _pycore.Kernel
else:
    try:
        from ._core import Kernel
    except ImportError:  # extension not built
        Kernel = _pycore.Kernel

BACKEND = Kernel.backend
EDGE, VERTEX = 0, 1


class OptionTable:
    """Flattened option lists for ``product_search``/``batch_search``.

    Each variable is an edge (options are colour maps) or a vertex (options
    are weight vectors); every option is a length-``s`` integer vector.
    """

    def __init__(self, s):
        self.s = s
        self.kinds = []
        self.vars = []
        self.offs = []
        self.counts = []
        self.data = []
        self.options = []

    def add(self, kind, var, options):
        options = [list(map(int, o)) for o in options]
        if not options:
            raise ValueError("a variable needs at least one option")
        for o in options:
            if len(o) != self.s:
                raise ValueError("option length must equal s")
        self.kinds.append(kind)
        self.vars.append(var)
        self.offs.append(len(self.data))
        self.counts.append(len(options))
        self.options.append(options)
        for o in options:
            self.data.extend(o)

    @property
    def size(self):
        total = 1
        for c in self.counts:
            total *= c
        return total

    def digits(self, index):
        out = []
        for c in self.counts:
            out.append(index % c)
            index //= c
        return out

    def apply(self, kernel, digits):
        for t, d in enumerate(digits):
            opt = self.options[t][d]
            if self.kinds[t] == EDGE:
                kernel.set_matching(self.vars[t], opt)
            else:
                kernel.set_f(self.vars[t], opt)

    def product_search(self, kernel, budget, precolored=()):
        return kernel.product_search(
            self.kinds, self.vars, self.data, self.offs, self.counts, budget, list(precolored)
        )

    def batch_search(self, kernel, choices, precolored=()):
        return kernel.batch_search(
            self.kinds, self.vars, self.data, self.offs, choices, list(precolored)
        )
