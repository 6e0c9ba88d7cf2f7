import pytest

from scatfact import kernels


@pytest.fixture(scope="session")
def warmed_backends() -> tuple[str, ...]:
    """Compile/exercise every kernel once so timed sections measure work, not JIT."""
    backends = kernels.available_backends()
    for name in backends:
        kernels.warm_up(name)
    return backends
