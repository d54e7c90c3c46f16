"""Smoke test for the pydiagalg extension.

Build and install first:

    pip install -e crates/py --no-build-isolation
"""

import pydiagalg


def test_enumerate():
    assert len(pydiagalg.enumerate("tl", 3)) == 5
    assert len(pydiagalg.enumerate("motzkin", 2)) == 9
    assert len(pydiagalg.enumerate("walled", r=1, s=2)) == 6


def test_multiply():
    prod = pydiagalg.multiply("rb", "1-2 1'-2'", "1-2 1'-2'", n=2, delta="2", epsilon="3")
    assert prod == [("2", "[1-2 1'-2']")]


def test_homology():
    tor, ext = pydiagalg.homology(group="s3", D=3)
    assert tor == [(1, []), (0, [2]), (0, []), (0, [6])]
    assert ext == [(1, []), (0, []), (0, [2]), (0, [])]
    tor, _ = pydiagalg.homology(family="tl", n=3, delta="1", ring="q")
    assert tor == [(1, []), (0, []), (0, []), (0, [])]


def test_tate_and_checks():
    t = pydiagalg.tate_group("s2", D=3)
    assert sorted(t) == list(range(-4, 4))
    assert all(t[p] == ((0, [2]) if p % 2 == 0 else (0, [])) for p in t)
    assert "rb-remark" in pydiagalg.checks()
    assert pydiagalg.verify("thm-walled-odd")


def test_errors():
    try:
        pydiagalg.enumerate("nonsense", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
