import numpy as np
import pytest

import magspec as ms


class TestBoxSpectrum:
    def test_unit_square_lowest_levels(self, square_spectrum):
        expected = np.pi**2 * np.array([2, 5, 5, 8, 10, 10, 13, 13, 17, 17, 18])
        assert square_spectrum.values[:11] == pytest.approx(expected, rel=1e-12)

    def test_riesz_mean_worked_value(self, square_spectrum):
        val = ms.riesz_mean(square_spectrum, 5 * np.pi**2)
        assert val == pytest.approx(3 * np.pi**2, rel=1e-12)

    def test_three_dimensional_box(self):
        spec = ms.box_spectrum([1.0, 1.0, 1.0], 10)
        assert spec.d == 3
        assert spec.values[0] == pytest.approx(3 * np.pi**2, rel=1e-12)
        assert np.all(spec.degeneracy_flags[1:4])

    def test_anisotropic_box(self):
        spec = ms.box_spectrum([2.0, 1.0], 6)
        expected = np.pi**2 * np.array([1.25, 2.0, 3.25, 4.25, 5.0, 5.0])
        assert spec.values == pytest.approx(expected, rel=1e-12)

    def test_weyl_asymptotics(self):
        spec = ms.box_spectrum([1.0, 1.0], 5000)
        k = np.arange(1, 5001)
        ratio = spec.values / (4 * np.pi * k)
        assert 0.9 < ratio[-1] < 1.2

    def test_rejects_bad_input(self):
        with pytest.raises(ms.InputDataError):
            ms.box_spectrum([1.0, -1.0], 5)
        with pytest.raises(ms.InputDataError):
            ms.box_spectrum([1.0], 5)
        with pytest.raises(ms.InputDataError):
            ms.box_spectrum([1.0, 1.0], 0)


class TestDiskSpectrum:
    def test_ground_state_is_squared_bessel_zero(self, disk_unit_spectrum):
        j01 = ms.bessel_zero(0.0, 1)
        assert disk_unit_spectrum.values[0] == pytest.approx(j01**2, rel=1e-12)

    def test_second_level_doubly_degenerate(self, disk_unit_spectrum):
        j11 = ms.bessel_zero(1.0, 1)
        assert disk_unit_spectrum.values[1] == pytest.approx(j11**2, rel=1e-12)
        assert disk_unit_spectrum.values[2] == pytest.approx(j11**2, rel=1e-12)
        assert disk_unit_spectrum.degeneracy_flags[1]
        assert disk_unit_spectrum.degeneracy_flags[2]

    def test_scaling_with_radius(self, disk_unit_spectrum):
        spec2 = ms.disk_spectrum(2.0, 50)
        assert spec2.values == pytest.approx(disk_unit_spectrum.values[:50] / 4.0,
                                             rel=1e-12)

    def test_ppw_ratio(self, disk_unit_spectrum):
        ratio = disk_unit_spectrum.values[1] / disk_unit_spectrum.values[0]
        assert ratio == pytest.approx(2.5387, abs=2e-4)

    def test_measure_attached(self, disk_unit_spectrum):
        assert disk_unit_spectrum.measure == pytest.approx(np.pi, rel=1e-12)

    def test_rejects_bad_input(self):
        with pytest.raises(ms.InputDataError):
            ms.disk_spectrum(0.0, 5)
        with pytest.raises(ms.InputDataError):
            ms.disk_spectrum(1.0, 100001)


class TestWeylEigenvalue:
    def test_two_dimensional_form(self):
        # v_2 = pi, so the k-th Weyl value on unit measure is 4 pi k
        assert ms.weyl_eigenvalue(2, 1.0, 10) == pytest.approx(40 * np.pi, rel=1e-12)

    def test_scaling_in_measure(self):
        a = ms.weyl_eigenvalue(3, 1.0, 7)
        b = ms.weyl_eigenvalue(3, 8.0, 7)
        assert b == pytest.approx(a / 4.0, rel=1e-12)
