from concurrent.futures import ThreadPoolExecutor

from schurweyl import characters, verify
from schurweyl.partitions import partitions_of


def test_full_suite_passes_on_a_correct_build():
    reports = verify.run_suite("all")
    names = [r["check"] for r in reports]
    assert len(names) == len(set(names))
    failed = [r for r in reports if not r["pass"]]
    assert not failed, failed


def test_suite_rejects_unknown_name():
    import pytest

    with pytest.raises(ValueError):
        verify.run_suite("nonsense")


def test_crashing_check_becomes_a_failed_report():
    def check_boom():
        raise RuntimeError("boom")

    rep = verify._run(check_boom)
    assert rep == {
        "check": "boom",
        "lhs": "exception: boom",
        "rhs": "0 failures",
        "pass": False,
    }


def test_character_cache_tolerates_concurrent_use():
    characters.clear_character_cache()
    jobs = [(lam, alpha) for lam in partitions_of(6) for alpha in partitions_of(6)]

    def work(pair):
        return characters.mn_character(*pair)

    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(work, jobs * 4))
    characters.clear_character_cache()
    serial = [characters.mn_character(*pair) for pair in jobs * 4]
    assert threaded == serial
