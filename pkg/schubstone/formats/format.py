from __future__ import annotations

import abc
import sys
from collections.abc import Iterable

from schubstone.db import NamedEntry


class OutputFormat(NamedEntry, metaclass=abc.ABCMeta):
    """How a computed object is written out."""

    def __init__(self, *, name: str, alt_names: Iterable[str] = (), description: str = ''):
        super().__init__(name, alt_names, description)

    @abc.abstractmethod
    def render(self, obj) -> str:
        """Return the text form of the object."""
        pass

    def supports(self, obj) -> bool:
        return True

    def write(self, obj, fileobj=None):
        if fileobj is None:
            fileobj = sys.stdout
        text = self.render(obj)
        if not text.endswith('\n'):
            text += '\n'
        fileobj.write(text)
