import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="run the order-8 enumeration criteria")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: float(s.split()[2].rstrip(":").replace("b", ".5"))):
            terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    import time
    from contextlib import contextmanager

    from xtar.xsets import _build_profile

    lines = request.config.stash[ACCEPTANCE]

    @contextmanager
    def run(num, title, limit):
        _build_profile.cache_clear()
        start = time.perf_counter()
        status, note = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed <= limit, f"took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        except BaseException as exc:
            note = f" [{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}]"
            raise
        finally:
            elapsed = time.perf_counter() - start
            line = f"{status} criterion {num}: {title} ({elapsed:.2f}s, limit {limit}s){note}"
            print(line)
            lines.append(line)

    return run
