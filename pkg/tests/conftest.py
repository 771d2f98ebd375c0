import pytest

from moodreel.moodcore import SentimentLexicon, default_lexicon, default_palette
from moodreel.pipeline import CampaignBrief
from moodreel.providers import load_song_catalog, mock_provider_set, sample_catalog_path


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def palette():
    return default_palette()


@pytest.fixture(scope="session")
def catalog():
    return load_song_catalog(sample_catalog_path())


@pytest.fixture
def providers():
    return mock_provider_set()


@pytest.fixture
def brief():
    return CampaignBrief(
        audience="Cat Owners in New York City",
        problem="Free-roaming pet cats are the biggest human-made threat to "
                "birds, causing the loss of 2.4 billion birds each year in "
                "the US alone",
        action="New Yorkers can help address this issue by keeping their pet "
                "cats indoors, and, if allowing them outdoors, keeping them "
                "under strict surveillance",
        mood="calm",
    )


@pytest.fixture
def tiny_lexicon():
    return SentimentLexicon({
        "good": 3, "great": 3, "bad": -3, "terrible": -3, "love": 3,
        "hate": -3, "nice": 3, "awful": -3, "fine": 2, "grim": -2,
    })


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per release criterion whenever the gate ran."""
    try:
        import test_acceptance
    except ImportError:
        return
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "").rsplit("::", 1)[-1]
            if name in test_acceptance.CRITERIA:
                verdicts[name] = "PASS" if outcome == "passed" else "FAIL"
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in test_acceptance.CRITERIA.items():
        if name in verdicts:
            terminalreporter.write_line(f"{verdicts[name]}  {label}")
