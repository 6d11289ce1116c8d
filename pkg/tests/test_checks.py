import numpy as np

from thermoarrow.checks import ALL_CHECKS, run_checks


def test_all_suites_pass():
    report = run_checks(seed=0, trials=60)
    assert report["all_pass"]
    assert set(report["checks"]) == {
        "free-energy",
        "clausius",
        "pairwise-arrow",
        "multipartite-arrow",
        "isospectral",
        "entropy",
        "energy",
    }
    for result in report["checks"].values():
        assert result["violations"] == 0
        assert result["trials"] > 0


def test_deterministic_per_seed():
    a = run_checks(seed=3, trials=30)
    b = run_checks(seed=3, trials=30)
    assert a == b


def test_different_seeds_differ():
    a = run_checks(seed=1, trials=30)
    b = run_checks(seed=2, trials=30)
    assert a["checks"]["clausius"]["max_residual"] != b["checks"]["clausius"]["max_residual"]


def test_result_schema():
    report = run_checks(seed=0, trials=14)
    for result in report["checks"].values():
        assert set(result) == {"id", "statement", "trials", "max_residual", "violations", "pass"}
        assert isinstance(result["pass"], bool)


def test_corruption_hook_triggers_violations():
    # replace the initial state of the pairwise-arrow suite with a correlated
    # state whose marginals match; reverse flow then breaks the inequality
    from thermoarrow.states import RhoACParams, rho_ac

    def corrupt(rho, name):
        if name != "pairwise-arrow":
            return rho
        la = float(np.diag(rho).real[:2].sum())
        lc = float(np.diag(rho).real[0] + np.diag(rho).real[2])
        g = min(la + lc, 2.0 - la - lc)
        return rho_ac(RhoACParams(la, lc, g))

    report = run_checks(seed=0, trials=60, corrupt=corrupt)
    assert not report["all_pass"]
    assert report["checks"]["pairwise-arrow"]["violations"] > 0
    assert report["checks"]["free-energy"]["pass"]  # untouched suites still pass


def test_corruption_of_entropy_suite():
    # swap the correlated pure state for a cold/hot thermal product: heat
    # flowing into the cold qubit raises its local entropy
    def corrupt(rho, name):
        if name != "entropy":
            return rho
        return np.kron(np.diag([0.05, 0.95]), np.diag([0.45, 0.55])).astype(complex)

    report = run_checks(seed=0, trials=60, corrupt=corrupt)
    assert not report["checks"]["entropy"]["pass"]


def test_check_registry_ids_unique():
    rng = np.random.default_rng(0)
    ids = [fn(np.random.default_rng(0), 7)["id"] for fn in ALL_CHECKS]
    assert len(ids) == len(set(ids))
