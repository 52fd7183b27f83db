import io
import json
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources

import pytest

from dpd import corpus as corpus_mod
from dpd.cli import main


@pytest.fixture(scope="session")
def entries():
    return {e.id: e for e in corpus_mod.corpus()}


def schema(name):
    return json.loads((resources.files("dpd") / "schemas" / f"{name}.json").read_text())


def validate(record, name):
    import jsonschema

    jsonschema.validate(record, schema(name))


def cli(*argv):
    """Run the CLI in process; returns (exit code, parsed stdout, stderr text)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main([str(a) for a in argv])
    text = out.getvalue()
    data = json.loads(text) if text.strip() and "--format" not in argv else text
    return code, data, err.getvalue()


@pytest.fixture
def corpus_file():
    def path(eid):
        return str(resources.files("dpd") / "data" / "corpus" / f"{eid}.json")

    return path
