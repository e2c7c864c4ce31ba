from __future__ import annotations

from functools import lru_cache
from importlib.resources import files

import pytest

from fiberlab.presentation import parse_presentation

CORPUS = ("taft_inf_2", "taft_inf_3", "ex3_8", "ex3_2", "q8_central")


@lru_cache(maxsize=None)
def load(name: str):
    text = (files("fiberlab") / "corpus" / f"{name}.hopf").read_text(encoding="utf-8")
    return parse_presentation(text, name=name)


def corpus_path(name: str):
    return files("fiberlab") / "corpus" / f"{name}.hopf"


@pytest.fixture(params=CORPUS)
def corpus_pres(request):
    return load(request.param)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    name = item.name
    if rep.when == "call" and rep.failed and name.startswith("test_criterion_"):
        n = name.split("_")[2]
        if not any(line.startswith(f"criterion {n}:") for line in ACCEPTANCE):
            ACCEPTANCE.append(f"criterion {n}: FAIL - {call.excinfo.typename}: {call.excinfo.value}")
