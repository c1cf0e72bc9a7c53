import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from qbx.corpus import CorpusConfig, full_corpus, named_examples  # noqa: E402

settings.register_profile("qbx", deadline=None, max_examples=60)
settings.load_profile("qbx")

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def examples():
    return named_examples()


@pytest.fixture(scope="session")
def corpus():
    return full_corpus(CorpusConfig(per_size=60))


@pytest.fixture(scope="session")
def data_dir():
    return DATA
