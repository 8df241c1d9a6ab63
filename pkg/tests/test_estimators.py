from fractions import Fraction

import gmpy2
import pytest
from hypothesis import assume, given, settings, strategies as st

from locorder.bigfloat import big, to_positional, working
from locorder.errors import (
    ConvergedExactly, DegenerateExtrapolationError, EstimatorUndefinedError,
    NotAsymptoticError,
)
from locorder.estimators import (
    IterateWindow, acloc, aitken_alpha, cloc, ecloc, pcloc, pcoc,
)
from locorder.harness.synthetic import SyntheticModel, default_models, generate_model_sequence

D = 50
TIGHT = big("1e-45", D)


def b(s):
    return big(s, D)


def close(x, y, tol=TIGHT):
    with working(D + 10):
        if isinstance(y, Fraction):
            y = gmpy2.mpfr(y.numerator) / y.denominator
        return abs(x - y) < tol


def test_trivial_examples():
    assert close(cloc(b("1e-20"), b("1e-10")), 2)
    with working(D):
        xs = (b(0), b("1e-10"), b("1e-10") + b("1e-20"))
    # x_2 carries 1e-60 absolute rounding against a 1e-20 difference
    assert close(acloc(xs[2], xs[1], xs[0]), 2, big("1e-40", D))
    assert close(pcloc(b("1e-30"), b("1e-10")), 3)
    assert close(pcoc(b("1e-40"), b("1e-20"), b("1e-10")), 2)
    assert close(pcoc(b("1e-90"), b("1e-30"), b("1e-10")), 3)


def test_forced_extrapolated_errors():
    # x_k = 1e12 * (1e-12)^k is geometric with limit 0, so e~ = (1e-12, 1e-24)
    window = [b("1e12"), b(1), b("1e-12"), b("1e-24")]
    assert close(ecloc(window), 2)
    assert close(IterateWindow(window, digits=D).ecloc(), 2)


def test_aitken_examples():
    with working(D):
        xs = [5 + 3 * b("0.1") ** k for k in range(3)]
    ex = aitken_alpha(xs[2], xs[1], xs[0])
    assert close(ex.alpha_tilde, 5)
    with working(D):
        assert ex.e_tilde == xs[2] - ex.alpha_tilde
    # 2.89 - 0.09^2 / (-0.71)
    want = Fraction(289, 100) + Fraction(81, 10000) / Fraction(71, 100)
    got = aitken_alpha(b("2.89"), b("2.8"), b("2.0")).alpha_tilde
    assert to_positional(got, 10) == "2.901408451"
    assert close(got, want, big("1e-47", D))
    with pytest.raises(DegenerateExtrapolationError):
        aitken_alpha(b(2), b(2), b(2))


def test_signals():
    with pytest.raises(ConvergedExactly):
        cloc(b(0), b("1e-10"))
    with pytest.raises(ConvergedExactly):
        acloc(b(1), b(1), b("0.5"))
    with pytest.raises(ConvergedExactly):
        pcloc(b("1e-10"), b(0))
    with pytest.raises(NotAsymptoticError):
        cloc(b("1e-3"), b("1.5"))
    with pytest.raises(NotAsymptoticError):
        pcloc(b("-2"), b("0.1"))
    with pytest.raises(EstimatorUndefinedError):
        pcoc(b(0), b("1e-3"), b("1e-2"))
    with pytest.raises(EstimatorUndefinedError):
        pcoc(b("1e-3"), b("1e-3"), b("1e-2"))
    with pytest.raises(ValueError):
        ecloc([b(1), b(2), b(3)])


def test_window_validation():
    with pytest.raises(ValueError):
        IterateWindow([b(1)] * 5)
    with pytest.raises(ValueError):
        IterateWindow([b(1), b(2)], fs=[b(1)])
    with working(D):
        xs = [b("0.5"), b("0.5") + b("1e-3"), b("0.5") + b("1e-3") + b("1e-9")]
    w = IterateWindow(xs, fs=[b("1e-2"), b("1e-4"), b("1e-8")], es=[b("1e-2"), b("1e-4"), b("1e-8")])
    assert close(w.cloc(), 2) and close(w.pcloc(), 2)
    assert abs(w.acloc() - 3) < 1e-30


def test_estimators_respect_input_precision():
    e_n, e_prev = big("1e-2000", 2100), big("1e-1000", 2100)
    r = cloc(e_n, e_prev)
    with working(2100):
        assert abs(r - 2) < big("1e-2000", 30)


magnitudes = st.integers(min_value=1, max_value=4000)


@settings(max_examples=60, deadline=None)
@given(magnitudes, magnitudes, st.integers(1, 9), st.integers(1, 9))
def test_base_invariance(p, q, m1, m2):
    assume(p != q)
    a, c = b(f"{m1}e-{p}"), b(f"{m2}e-{q}")
    with working(D):
        ln = gmpy2.log(a) / gmpy2.log(c)
        lg = gmpy2.log10(a) / gmpy2.log10(c)
    for fn in (cloc, pcloc):
        assert close(fn(a, c, D), lg)
    assert close(ln, lg)


nonzero = st.fractions(min_value=-10, max_value=10).filter(lambda v: abs(v) > Fraction(1, 10))
ratios = st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10)).filter(
    lambda v: abs(v) > Fraction(1, 20))


@settings(max_examples=80, deadline=None)
@given(st.fractions(min_value=-10, max_value=10), nonzero, ratios, st.integers(0, 5))
def test_aitken_exact_on_geometric_sequences(alpha, c, r, k0):
    def num(v):
        return big(v.numerator, D + 10) / v.denominator

    with working(D):
        xs = [num(alpha) + num(c) * num(r) ** k for k in range(k0, k0 + 3)]
    got = aitken_alpha(xs[2], xs[1], xs[0], D).alpha_tilde
    with working(D + 10):
        # the inputs carry 50-digit rounding; cancellation in the second
        # difference scales it by at most |alpha| / |c r^k (1 - r)^2|
        scale = (abs(num(alpha)) + 1) / (abs(num(c) * num(r) ** (k0 + 2)) * (1 - num(r)) ** 2)
        assert abs(got - num(alpha)) <= big("1e-48", D) * scale


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["1e-3", "1e-1", "0.5", "2", "10", "1e3"]),
       st.sampled_from(["(1+sqrt(5))/2", "2", "1+sqrt(2)", "3", "4"]),
       st.sampled_from(["1e-6", "1e-8", "1e-12"]), st.integers(1, 4))
def test_model_cloc_identity(C, rho, e0, n):
    seq = generate_model_sequence(SyntheticModel(C, rho, e0, count=n + 1, digits=D))
    e = seq.errors
    lam = cloc(e[n], e[n - 1], D)
    with working(D):
        pred = gmpy2.log(big(C, D)) / gmpy2.log(e[n - 1])
        assert abs((lam - seq.rho) - pred) < big("1e-20", D)


def test_model_identity_example():
    seq = generate_model_sequence(SyntheticModel("1e-3", 2, "1e-2", count=3, digits=D))
    assert close(seq.errors[1], b("1e-7"), big("1e-55", D))
    lam = cloc(seq.errors[2], seq.errors[1], D)
    assert close(lam, Fraction(17, 7))


def valid_models(**kw):
    out = []
    for m in default_models():
        try:
            out.append(generate_model_sequence(SyntheticModel(m.C, m.rho, m.e0, **kw)))
        except Exception:  # non-convergent grid points are covered in test_harness
            continue
    return out


def slope(xs, ys):
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def test_aitken_exponent_slope_on_models():
    for seq in valid_models():
        e, rho = seq.errors, seq.rho
        with working(80):
            ks = range(len(e) - 4, len(e))
            et = [aitken_alpha(e[k], e[k - 1], e[k - 2], 80).e_tilde for k in ks]
            s = slope([gmpy2.log(abs(e[k])) for k in ks], [gmpy2.log(abs(t)) for t in et])
            assert abs(s - (2 * rho - 1) / rho**2) < 1e-3, seq.model


def test_difference_ratio_exponent_on_models():
    # log|d_n/d_{n-1}| / log|e_n| -> (rho-1)/rho^2 with an O(log C / log e_n)
    # remainder, which is below 1e-3 for every model once |e_n| < 1e-3000
    for seq in valid_models(stop_exponent=3000):
        e, rho = seq.errors, seq.rho
        with working(80):
            n = len(e) - 1
            r = gmpy2.log(abs((e[n] - e[n - 1]) / (e[n - 1] - e[n - 2]))) / gmpy2.log(abs(e[n]))
            assert abs(r - (rho - 1) / rho**2) < 1e-3, seq.model
    # with C = 1 the remainder vanishes and 1e-50 is already deep enough
    for rho in ("(1+sqrt(5))/2", "2", "1+sqrt(3)", "4"):
        seq = generate_model_sequence(SyntheticModel(1, rho, "1e-2", stop_exponent=50))
        e = seq.errors
        n = len(e) - 1
        with working(80):
            r = gmpy2.log(abs((e[n] - e[n - 1]) / (e[n - 1] - e[n - 2]))) / gmpy2.log(abs(e[n]))
            assert abs(r - (seq.rho - 1) / seq.rho**2) < 1e-3
