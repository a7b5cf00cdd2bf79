import pytest

from graphvuln import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile/load every kernel once so timed tests see steady-state costs."""
    for name in kernels.available_backends():
        with kernels.use_backend(name):
            kernels.warmup()


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Run a test under each kernel backend."""
    with kernels.use_backend(request.param):
        yield request.param
