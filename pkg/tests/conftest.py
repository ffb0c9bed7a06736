import pytest

from dagconvex import gen_random_connected_dag

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus):
    # surface the per-criterion verdicts even though passing tests have
    # their stdout captured
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


def corpus(count, n_of, p_cycle=(0.2, 0.4, 0.7), seed_base=0):
    """Deterministic list of random connected DAGs for property checks."""
    out = []
    for idx in range(count):
        n = n_of(idx)
        p = p_cycle[idx % len(p_cycle)]
        out.append(gen_random_connected_dag(n, p, seed_base + idx))
    return out


@pytest.fixture(scope="session")
def small_corpus():
    """40 connected DAGs with n <= 8, enough for exhaustive oracle work."""
    return corpus(40, lambda idx: 1 + idx % 8, seed_base=9000)
