import pytest

from pathlib import Path

from coocnet.cooc import build_index, load_weight_config
from coocnet.ontology import load_dictionary
from coocnet.store import IndexBundle, save_index

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def dictionary():
    return load_dictionary(FIXTURES / "dictionary.jsonl")


@pytest.fixture(scope="session")
def corpus_lines():
    text = (FIXTURES / "corpus.jsonl").read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="session")
def weight_config():
    return load_weight_config(FIXTURES / "weights.json")


@pytest.fixture(scope="session")
def build(dictionary, corpus_lines, weight_config):
    return build_index(corpus_lines, dictionary, weight_config)


@pytest.fixture(scope="session")
def bundle(build, dictionary, weight_config):
    return IndexBundle.from_build(build, dictionary, weight_config)


@pytest.fixture(scope="session")
def index_dir(bundle, tmp_path_factory):
    path = tmp_path_factory.mktemp("index")
    save_index(bundle, path)
    return path


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    # One visible pass/fail line per acceptance criterion.
    if report.when == "call" and item.fspath.basename == "test_acceptance.py":
        reporter = item.config.pluginmanager.get_plugin("terminalreporter")
        if reporter is not None:
            label = (item.function.__doc__ or item.name).strip().splitlines()[0]
            status = "PASS" if report.passed else "FAIL"
            reporter.write_line(f"[{status}] {label}")
