import numpy as np
import pytest

from circle_fft.models import OpCount
from circle_fft.transforms import (
    butterfly,
    fft,
    fft_batch,
    fft_iterative,
    fft_recursive,
    fft_stages,
    ifft,
    make_plan,
    naive_dft,
    twiddle_table,
)
from circle_fft.utils.constants import ORACLE_TOL, ROUND_TRIP_TOL, VARIANT_TOL
from circle_fft.utils.exceptions import SizeMismatchError, UnsupportedSizeError

POWERS = [2**p for p in range(0, 13)]


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, [0]),
        (2, [0, 1]),
        (4, [0, 2, 1, 3]),
        (8, [0, 4, 2, 6, 1, 5, 3, 7]),
    ],
)
def test_make_plan_bit_reversal(n, expected):
    plan = make_plan(n)
    assert plan.order == n
    assert list(plan.bit_reversal) == expected


@pytest.mark.parametrize("n", [16, 256, 4096])
def test_bit_reversal_is_reversed_binary_involution(n):
    plan = make_plan(n)
    rev = plan.bit_reversal
    bits = plan.levels
    assert list(rev[rev]) == list(range(n))
    for j in (0, 1, n // 3, n - 1):
        assert rev[j] == int(format(j, f"0{bits}b")[::-1], 2)


@pytest.mark.parametrize("n", [0, 3, 6, 12, 1000])
def test_make_plan_rejects_unsupported_sizes(n):
    with pytest.raises(UnsupportedSizeError):
        make_plan(n)


def test_plan_is_immutable():
    plan = make_plan(8)
    with pytest.raises(ValueError):
        plan.bit_reversal[0] = 1
    with pytest.raises(Exception):
        plan.order = 16


def test_one_point_dft_is_identity():
    np.testing.assert_array_equal(fft_recursive([5]).bins, [5])
    np.testing.assert_array_equal(fft_iterative([5 - 2j], make_plan(1)).bins, [5 - 2j])


def test_hand_derived_fixture_on_all_implementations(hand_signal, hand_spectrum):
    plan = make_plan(4)
    for spectrum in (naive_dft(hand_signal), fft_recursive(hand_signal), fft_iterative(hand_signal, plan)):
        assert np.max(np.abs(spectrum.bins - np.array(hand_spectrum))) <= 1e-12


def test_constant_fixture():
    np.testing.assert_allclose(fft_iterative([1, 1, 1, 1], make_plan(4)).bins, [4, 0, 0, 0], atol=1e-12)
    np.testing.assert_allclose(ifft([4, 0, 0, 0], make_plan(4)).samples, [1, 1, 1, 1], atol=1e-12)


@pytest.mark.parametrize("n", [3, 5, 6, 12])
def test_fft_rejects_non_power_of_two(n):
    with pytest.raises(UnsupportedSizeError):
        fft_recursive(np.ones(n))
    with pytest.raises(UnsupportedSizeError):
        fft(np.ones(n))


def test_size_mismatch():
    plan = make_plan(8)
    with pytest.raises(SizeMismatchError):
        fft_iterative(np.ones(4), plan)
    with pytest.raises(SizeMismatchError):
        ifft(np.ones(16), plan)


@pytest.mark.parametrize("n", POWERS[:11])
def test_oracle_equivalence(make_signal, n):
    plan = make_plan(n)
    for _ in range(5):
        x = make_signal(n)
        oracle = naive_dft(x).bins
        recursive = fft_recursive(x).bins
        iterative = fft_iterative(x, plan).bins
        assert np.max(np.abs(recursive - oracle)) <= ORACLE_TOL
        assert np.max(np.abs(iterative - oracle)) <= ORACLE_TOL
        assert np.max(np.abs(iterative - recursive)) <= VARIANT_TOL


def test_oracle_equivalence_many_trials_at_eight(make_signal):
    plan = make_plan(8)
    for _ in range(1000):
        x = make_signal(8)
        assert np.max(np.abs(fft_recursive(x).bins - naive_dft(x).bins)) <= ORACLE_TOL
        assert np.max(np.abs(fft_iterative(x, plan).bins - naive_dft(x).bins)) <= ORACLE_TOL


def test_variants_agree_at_1024(make_signal):
    x = make_signal(1024)
    assert np.max(np.abs(fft_iterative(x, make_plan(1024)).bins - fft_recursive(x).bins)) <= VARIANT_TOL


@pytest.mark.parametrize("n", [2, 4, 64, 4096])
def test_round_trip(make_signal, n):
    x = make_signal(n)
    plan = make_plan(n)
    assert np.max(np.abs(ifft(fft_iterative(x, plan), plan).samples - x)) <= ROUND_TRIP_TOL


def test_round_trip_single_point():
    np.testing.assert_allclose(ifft(fft([1])).samples, [1])


@pytest.mark.parametrize("n", [8, 32])
def test_butterfly_sign_flip(make_signal, n):
    """
    Bins k and k + N/2 come from one butterfly:
    bins[k] + bins[k+N/2] = 2E[k] and bins[k] - bins[k+N/2] = 2 w O[k].
    """
    x = make_signal(n)
    half = n // 2
    bins = fft_recursive(x).bins
    even = naive_dft(x[0::2]).bins
    odd = naive_dft(x[1::2]).bins
    w = twiddle_table(n).factors[:half]

    assert np.max(np.abs(bins[:half] + bins[half:] - 2 * even)) <= 1e-10
    assert np.max(np.abs(bins[:half] - bins[half:] - 2 * w * odd)) <= 1e-10


def test_butterfly_counts_one_mult_two_adds_per_pair():
    counter = OpCount()
    upper, lower = butterfly(np.array([1, 2]), np.array([3, 4]), np.array([1, -1j]), counter)
    np.testing.assert_allclose(upper, [4, 2 - 4j])
    np.testing.assert_allclose(lower, [-2, 2 + 4j])
    assert counter == OpCount(mults=2, adds=4)


def test_butterfly_writes_back_in_place():
    even = np.array([1, 2], dtype=np.complex128)
    odd = np.array([3, 4], dtype=np.complex128)
    scratch = np.empty(2, dtype=np.complex128)
    upper, lower = butterfly(even, odd, np.array([1, -1j]), out=(even, odd), scratch=scratch)
    assert upper is even and lower is odd
    np.testing.assert_allclose(even, [4, 2 - 4j])
    np.testing.assert_allclose(odd, [-2, 2 + 4j])


def test_plan_stage_twiddles():
    plan = make_plan(16)
    factors = plan.twiddles.factors
    assert [w.size for w in plan.stage_twiddles] == [1, 2, 4, 8]
    np.testing.assert_array_equal(plan.stage_twiddles[1], factors[[0, 4]])
    np.testing.assert_array_equal(plan.stage_twiddles[-1], factors[:8])
    assert make_plan(1).stage_twiddles == ()


def test_passes_run_inside_the_bit_reversed_buffer(make_signal):
    n = 64
    plan = make_plan(n)
    x = make_signal(n)
    buf = x[plan.bit_reversal]
    assert fft_stages(buf, plan) is buf
    assert np.max(np.abs(buf - naive_dft(x).bins)) <= ORACLE_TOL


def test_batch_matches_row_by_row(make_signal):
    n, rows = 32, 5
    batch = np.stack([make_signal(n) for _ in range(rows)])
    counter = OpCount()
    spectra = fft_batch(batch, make_plan(n), counter)
    assert spectra.shape == (rows, n)
    for spectrum, x in zip(spectra, batch):
        assert np.max(np.abs(spectrum - fft_iterative(x).bins)) <= VARIANT_TOL
    assert counter == OpCount(mults=rows * 16 * 5, adds=rows * 32 * 5)
    with pytest.raises(SizeMismatchError):
        fft_batch(batch, make_plan(16))


@pytest.mark.parametrize("variant", ["recursive", "iterative"])
@pytest.mark.parametrize("n", POWERS)
def test_exact_counts(make_signal, variant, n):
    counter = OpCount()
    if variant == "recursive":
        fft_recursive(make_signal(n), counter)
    else:
        fft_iterative(make_signal(n), make_plan(n), counter)
    levels = n.bit_length() - 1
    assert counter == OpCount(mults=(n // 2) * levels, adds=n * levels)


def test_counts_do_not_depend_on_values(make_signal):
    first, second = OpCount(), OpCount()
    fft_iterative(make_signal(256), None, first)
    fft_iterative(np.zeros(256), None, second)
    assert first == second


@pytest.mark.parametrize("transform", [fft_recursive, fft])
def test_parseval_linearity_and_shift(make_signal, rng, transform):
    n = 128
    x, y = make_signal(n), make_signal(n)
    X = transform(x).bins

    assert np.sum(np.abs(X) ** 2) == pytest.approx(n * np.sum(np.abs(x) ** 2), rel=1e-10)

    alpha, beta = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
    combined = transform(alpha * x + beta * y).bins
    assert np.max(np.abs(combined - (alpha * X + beta * transform(y).bins))) <= 1e-10

    shifted = transform(np.roll(x, 1)).bins
    assert np.max(np.abs(shifted - twiddle_table(n).factors * X)) <= 1e-10


def test_repeated_calls_are_bit_identical(make_signal):
    x = make_signal(512)
    plan = make_plan(512)
    np.testing.assert_array_equal(fft_iterative(x, plan).bins, fft_iterative(x, plan).bins)
    np.testing.assert_array_equal(fft_recursive(x).bins, fft_recursive(x).bins)


def test_input_is_not_modified(make_signal):
    x = make_signal(64)
    original = x.copy()
    fft_iterative(x)
    fft_recursive(x)
    np.testing.assert_array_equal(x, original)


@pytest.mark.slow
def test_oracle_equivalence_acceptance_sweep(make_signal):
    """100 random signals per power of two up to 4096."""
    for n in POWERS:
        plan = make_plan(n)
        for _ in range(100):
            x = make_signal(n)
            iterative = fft_iterative(x, plan).bins
            assert np.max(np.abs(iterative - naive_dft(x).bins)) <= ORACLE_TOL
            assert np.max(np.abs(fft_recursive(x).bins - iterative)) <= VARIANT_TOL


@pytest.mark.slow
def test_round_trip_and_conservation_acceptance(make_signal):
    n = 1024
    plan = make_plan(n)
    factors = twiddle_table(n).factors
    for _ in range(100):
        x = make_signal(n)
        X = fft_iterative(x, plan).bins
        assert np.max(np.abs(ifft(X, plan).samples - x)) <= ROUND_TRIP_TOL
        assert np.sum(np.abs(X) ** 2) == pytest.approx(n * np.sum(np.abs(x) ** 2), rel=1e-10)
        shifted = fft_iterative(np.roll(x, 1), plan).bins
        assert np.max(np.abs(shifted - factors * X)) <= 1e-10
