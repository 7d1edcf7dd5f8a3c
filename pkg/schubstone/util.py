import os

from schubstone.errors import ParseError, BoundError


MAX_N_ENV = 'SCHUBERT_MAX_N'
DEFAULT_MAX_N = 6


def max_n():
    """Cap on n for Kostka matrices and exhaustive sweeps (env SCHUBERT_MAX_N, default 6)."""
    value = os.environ.get(MAX_N_ENV)
    if value is None or value.strip() == '':
        return DEFAULT_MAX_N
    try:
        return int(value)
    except ValueError:
        raise BoundError(f'{MAX_N_ENV} must be an integer, got "{value}"') from None


def check_max_n(n, what):
    limit = max_n()
    if n > limit:
        raise BoundError(f'{what}: n={n} exceeds the configured bound {limit} (set {MAX_N_ENV} to raise it)')


def parse_int_list(text, *, compact_ok=True):
    """
    Parse "3241" or "10,2,3,1" (optionally bracketed) into a tuple of ints.

    Compact digit strings are read one digit per entry.
    """
    stripped = text.strip()
    offset = text.find(stripped) if stripped else 0
    if stripped.startswith('[') or stripped.startswith('('):
        if len(stripped) < 2 or stripped[-1] not in ')]':
            raise ParseError(text, offset + len(stripped), 'unbalanced bracket')
        stripped = stripped[1:-1]
        offset += 1

    if stripped == '':
        return ()

    if ',' not in stripped:
        if not compact_ok:
            raise ParseError(text, offset, 'expected a comma-separated list')
        for i, c in enumerate(stripped):
            if not c.isdigit():
                raise ParseError(text, offset + i, f'unexpected character "{c}"')
        return tuple(int(c) for c in stripped)

    values = []
    position = offset
    for part in stripped.split(','):
        item = part.strip()
        if item == '' or not item.isdigit():
            raise ParseError(text, position, f'expected a nonnegative integer, got "{part}"')
        values.append(int(item))
        position += len(part) + 1
    return tuple(values)


def trim_zeros(entries):
    """Strip trailing zeros from an integer sequence and return a tuple."""
    entries = tuple(entries)
    end = len(entries)
    while end > 0 and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


def is_interval(values):
    """True if the given integers form a contiguous range (empty counts as an interval)."""
    values = set(values)
    if len(values) == 0:
        return True
    return max(values) - min(values) + 1 == len(values)
