"""Small helpers shared by the solvers."""

import gc
from contextlib import contextmanager


@contextmanager
def gc_paused():
    """Suspend the cyclic garbage collector for the duration of the block.

    The large-instance solvers allocate millions of small acyclic objects;
    the collector's generational passes over them cost more than the work
    itself.  Reference counting still frees everything.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()
