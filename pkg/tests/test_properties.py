"""One pytest entry per randomized property suite (see propsuites.py)."""

import propsuites


def test_buchberger_criterion():
    propsuites.suite_buchberger(cases=100)


def test_groebner_matches_reference():
    propsuites.suite_buchberger_reference(cases=30)


def test_resolutions_compose_to_zero_and_are_minimal():
    propsuites.suite_resolution(cases=100)


def test_betti_alternating_sum_is_hilbert_function():
    propsuites.suite_betti_hilbert(cases=100)


def test_tor_is_symmetric():
    propsuites.suite_tor_symmetry(cases=100)


def test_euler_characteristic_consistency():
    propsuites.suite_euler(cases=100)


def test_sheaf_ext_stable_under_deeper_truncation():
    propsuites.suite_truncation_stability(cases=100)


def test_saturation_idempotent():
    propsuites.suite_saturation_idempotence(cases=100)
