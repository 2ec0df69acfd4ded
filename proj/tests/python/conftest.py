import pytest


def pytest_configure(config):
    try:
        import charcount  # noqa: F401
    except ImportError:
        # reported by ctest as skipped
        pytest.exit("charcount is not installed; run pip install --no-build-isolation .", returncode=77)
