from __future__ import annotations

from collections.abc import Iterable, Generator
from typing import TypeVar, Type, Generic

from schubstone.errors import NotFoundError


T = TypeVar('T', bound='NamedEntry')


class Registry(Generic[T]):
    """Name -> entry table. Child registries forward their entries to the parent."""

    def __init__(self, parent: Registry[T] = None):
        self._entries: list[T] = []
        self._by_name: dict[str, T] = {}
        self._parent = parent

    def register(self, entry: T):
        if entry in self._entries:
            raise RuntimeError(f'{entry!r} is already registered')
        for name in entry.all_names:
            if name in self._by_name:
                raise RuntimeError(f'Duplicate entry name: {name}')

        self._entries.append(entry)
        self._entries.sort(key=lambda e: e.name)
        for name in entry.all_names:
            self._by_name[name] = entry

        if self._parent is not None:
            self._parent.register(entry)

    def get(self, name: str):
        return self._by_name.get(name.lower())

    def all(self):
        yield from self._entries


class NamedEntry:
    """
    An entry that can be looked up by name.

    Each direct subclass of NamedEntry owns its own Registry (output formats,
    stable-expansion methods, golden checks, ...).
    """

    _registry: Registry
    description: str = ''

    @classmethod
    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        base = cls.__bases__[0]
        if base is NamedEntry:
            cls._registry = Registry()
        else:
            cls._registry = Registry(base._registry)

    @classmethod
    def by_name(cls: Type[T], name) -> T:
        """Return the entry with the given name or alt name."""
        entry = cls._registry.get(name)
        if entry is None:
            known = ', '.join(e.name for e in cls.all())
            raise NotFoundError(f'Unknown {cls.__name__} "{name}" (known: {known})') from None
        return entry

    @classmethod
    def all(cls: Type[T]) -> Generator[T]:
        """Return an iterable of all registered entries, sorted by name."""
        return cls._registry.all()

    def __init__(self, name: str, alt_names: Iterable[str] = (), description: str = ''):
        self.name = name.lower()
        alt_names = set(n.lower() for n in alt_names)
        self.alt_names = sorted(alt_names - {self.name})
        self.all_names = sorted(alt_names | {self.name})
        self.description = description

        self._registry.register(self)

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self.name}'>"
