import pytest

from symedge.symbolic import EdgeIdealContext


@pytest.fixture(scope="session")
def ctx_k3():
    return EdgeIdealContext.from_family("complete:3")


@pytest.fixture(scope="session")
def ctx_k4():
    return EdgeIdealContext.from_family("complete:4")


@pytest.fixture(scope="session")
def ctx_k5():
    return EdgeIdealContext.from_family("complete:5")


@pytest.fixture(scope="session")
def ctx_c5():
    return EdgeIdealContext.from_family("cycle:5")


@pytest.fixture(scope="session")
def ctx_cs23():
    return EdgeIdealContext.from_family("cliquesum:2,3")


@pytest.fixture(scope="session")
def ctx_cs22():
    return EdgeIdealContext.from_family("cliquesum:2,2")
