import pytest

import sccalib as s


@pytest.fixture(scope="session")
def falk_records():
    return s.load_falk()


@pytest.fixture(scope="session")
def hofstede_records():
    return s.load_hofstede()


@pytest.fixture(scope="session")
def literature_records():
    return s.load_literature()


@pytest.fixture(scope="session")
def populations(falk_records):
    return {r.country_code: r.population for r in falk_records}


@pytest.fixture(scope="session")
def incomes():
    return s.load_income()


@pytest.fixture(scope="session")
def scenarios():
    return s.load_scenarios(horizon=2300)


@pytest.fixture(scope="session")
def ssp2(scenarios):
    return scenarios["SSP2"]


@pytest.fixture(scope="session")
def ssp2_experiment(ssp2):
    return s.PulseExperiment.build(ssp2, s.ModelConfig(), s.DamageSpec())
