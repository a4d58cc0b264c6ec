import functools

import pytest

from primalrough.instances import fixture as _load


@functools.lru_cache(maxsize=None)
def load(name):
    return _load(name)


@pytest.fixture
def inst():
    return load


def S(instance, *labels):
    """Subset of an instance's universe from labels."""
    return instance.universe.subset(labels)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        entries = RESULTS[n]
        ok = all(e[0] for e in entries)
        if len(entries) == 1:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {entries[0][1]}")
        else:
            failed = [d for good, d in entries if not good]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {len(entries) - len(failed)}/{len(entries)} items")
            for d in failed:
                terminalreporter.write_line(f"    not met: {d}")
