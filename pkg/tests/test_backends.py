"""The compiled scan kernel and the pure-Python fallback must agree exactly."""

import pytest

from kacdecomp import _matchscan_py
from kacdecomp.diagrams import _scan_inputs, from_spec

from conftest import fab, random_diagrams

compiled = pytest.importorskip(
    "kacdecomp._matchscan", reason="compiled kernel not built"
)


def scan_both(f):
    window, k, table_lo, syms = _scan_inputs(f)
    return (
        compiled.scan_matching(window, k, table_lo, syms),
        _matchscan_py.scan_matching(window, k, table_lo, syms),
    )


def test_agreement_on_examples(worked):
    for f in [fab(2, 3), fab(2, 4), from_spec({0}), worked]:
        fast, slow = scan_both(f)
        assert fast == slow


def test_agreement_random():
    for f in random_diagrams(60, seed=77, max_crosses=4, lo=-8, hi=8):
        if f.atypicality == 0:
            continue
        fast, slow = scan_both(f)
        assert fast == slow
        assert fast  # f itself always matches


def test_output_order_is_decreasing_lex(worked):
    fast, _ = scan_both(worked)
    assert fast == sorted(fast, reverse=True)


def test_rejects_zero_crosses():
    window, _k, table_lo, syms = _scan_inputs(from_spec({0}))
    with pytest.raises(ValueError):
        compiled.scan_matching(window, 0, table_lo, syms)
    with pytest.raises(ValueError):
        _matchscan_py.scan_matching(window, 0, table_lo, syms)
