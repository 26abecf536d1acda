import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE = {}


def clear_caches():
    """Drop every memoized group, cover and sheet so timings start cold."""
    import importlib

    groupfacts = importlib.import_module("unramcert.certify.groupfacts")
    detcover = importlib.import_module("unramcert.covers.detcover")
    spin = importlib.import_module("unramcert.covers.spin")
    lattice = importlib.import_module("unramcert.permgroup.lattice")
    pgl2 = importlib.import_module("unramcert.permgroup.pgl2")
    families = importlib.import_module("unramcert.specialize.families")

    lattice._CACHE.clear()
    detcover._CACHE.clear()
    spin._SPIN.clear()
    pgl2._PGL.clear()
    for fn in (spin.reduced_word, spin.section, spin.cocycle, groupfacts.subgroup_certificate):
        fn.cache_clear()
    for name in ("base_sl27_sheet", "f_family_sheet", "base_2a7_sheet", "s_family_sheet", "sl27_inertia_data", "s7_inertia_data"):
        getattr(families, name).cache_clear()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, label = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s  {label}")
