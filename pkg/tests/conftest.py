import pytest

from cogres import load_builtin_config


@pytest.fixture(scope="session")
def default_config():
    return load_builtin_config()


@pytest.fixture(scope="session")
def default_stack(default_config):
    return default_config.assembly
