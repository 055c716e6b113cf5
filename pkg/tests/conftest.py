import pytest
from hypothesis import HealthCheck, settings

from wittcycles import build_edge_matrix, corpus_graphs, symmetrize, trace_powers

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture(scope="session")
def corpus_matrices(corpus):
    return {name: build_edge_matrix(symmetrize(g)) for name, g in corpus.items()}


@pytest.fixture(scope="session")
def corpus_traces(corpus_matrices):
    # 24 covers every divisor-identity invariant exercised below.
    return {name: trace_powers(t, 24) for name, t in corpus_matrices.items()}
