// SPDX-License-Identifier: Apache-2.0
//
// nfmimo: near-field line-of-sight MIMO performance analysis toolkit
// Copyright (C) 2026 The nfmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Shared fixtures and independent reference implementations for the test suites.
// Nothing in here calls into the library routines it is used to check.

#ifndef NFMIMO_TEST_SUPPORT_HPP
#define NFMIMO_TEST_SUPPORT_HPP

#include "nfmimo/nfmimo.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace nfmimo::test
{
    inline constexpr double f28 = 28e9;
    inline const double lambda28 = speed_of_light / f28;

    // 100 lambda x 25 lambda apertures at 28 GHz, P = 10 dBm, N0 = -90 dBm
    inline SystemConfig continuous_config()
    {
        SystemConfig c;
        c.continuous_tx_length = 100.0 * lambda28;
        c.continuous_rx_length = 25.0 * lambda28;
        return c;
    }

    inline ContinuousLink continuous_link(double d)
    {
        return {100.0 * lambda28, 25.0 * lambda28, d, lambda28};
    }

    inline DiscreteLink discrete_link(int nt, int nr, double q, double le, double d)
    {
        return {{nt, q, le}, {nr, q, le}, d, lambda28};
    }

    // 400 x 100, q = lambda/2, l_e = lambda/16
    inline DiscreteLink link_400x100(double d)
    {
        return discrete_link(400, 100, lambda28 / 2, lambda28 / 16, d);
    }

    inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

    inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64 &g)
    {
        std::normal_distribution<double> n;
        return ComplexMatrix::generate(r, c, [&](std::size_t, std::size_t)
                                       { return cplx(n(g), n(g)); });
    }

    // ---- oracles ---------------------------------------------------------------------

    // R = H* H by the textbook triple loop
    inline std::vector<cplx> gram_triple_loop(const ComplexMatrix &H)
    {
        const std::size_t n = H.cols();
        std::vector<cplx> R(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
            {
                cplx s = 0;
                for (std::size_t k = 0; k < H.rows(); ++k)
                    s += std::conj(H(k, i)) * H(k, j);
                R[i * n + j] = s;
            }
        return R;
    }

    // Characteristic polynomial det(xI - A) by Faddeev-LeVerrier, coefficients c[0..n] with c[n] = 1
    inline std::vector<double> characteristic_polynomial(const std::vector<cplx> &A, std::size_t n)
    {
        using lc = std::complex<long double>;
        std::vector<lc> M(n * n, 0.0L), AM(n * n);
        std::vector<lc> c(n + 1);
        c[n] = 1.0L;
        for (std::size_t k = 1; k <= n; ++k)
        {
            // M_k = A M_{k-1} + c_{n-k+1} I
            for (std::size_t i = 0; i < n; ++i)
                M[i * n + i] += c[n - k + 1];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                {
                    lc s = 0;
                    for (std::size_t l = 0; l < n; ++l)
                        s += lc(A[i * n + l]) * M[l * n + j];
                    AM[i * n + j] = s;
                }
            lc tr = 0;
            for (std::size_t i = 0; i < n; ++i)
                tr += AM[i * n + i];
            c[n - k] = -tr / static_cast<long double>(k);
            M = AM;
        }
        std::vector<double> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            out[i] = static_cast<double>(c[i].real());
        return out;
    }

    // Real roots of a polynomial with only real, distinct roots inside [-bound, bound],
    // by sign-change scanning and bisection. Returned descending.
    inline std::vector<double> polynomial_roots(const std::vector<double> &c, double bound)
    {
        auto p = [&](long double x)
        {
            long double v = 0;
            for (std::size_t i = c.size(); i-- > 0;)
                v = v * x + c[i];
            return v;
        };
        const int steps = 200000;
        std::vector<double> roots;
        long double a = -bound, pa = p(a);
        for (int s = 1; s <= steps; ++s)
        {
            const long double b = -bound + 2.0L * bound * s / steps, pb = p(b);
            if ((pa < 0) != (pb < 0))
            {
                long double lo = a, hi = b, plo = pa;
                for (int it = 0; it < 200; ++it)
                {
                    const long double mid = 0.5L * (lo + hi), pm = p(mid);
                    if ((pm < 0) == (plo < 0))
                        lo = mid, plo = pm;
                    else
                        hi = mid;
                }
                roots.push_back(static_cast<double>(0.5L * (lo + hi)));
            }
            a = b, pa = pb;
        }
        std::sort(roots.rbegin(), roots.rend());
        return roots;
    }

    // Maximises sum log2(1 + p_i g_i) over a grid of power splits (2 or 3 channels)
    inline double water_fill_grid_search(const std::vector<double> &s, double P, double N0, int steps)
    {
        double best = 0.0;
        auto cap = [&](const std::vector<double> &p)
        {
            double c = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                c += std::log2(1.0 + p[i] * s[i] * s[i] / N0);
            return c;
        };
        if (s.size() == 2)
            for (int i = 0; i <= steps; ++i)
                best = std::max(best, cap({P * i / steps, P * (steps - i) / steps}));
        else
            for (int i = 0; i <= steps; ++i)
                for (int j = 0; j <= steps - i; ++j)
                    best = std::max(best, cap({P * i / steps, P * j / steps, P * (steps - i - j) / steps}));
        return best;
    }

    // Channel entry from explicit element coordinates: both arrays centered on the z-axis,
    // receiver displaced by d along x
    inline cplx channel_entry_by_coordinates(const DiscreteLink &l, int n, int m)
    {
        const double zt = (m + 1 - 0.5 * (l.tx.num_antennas + 1)) * l.tx.spacing;
        const double zr = (n + 1 - 0.5 * (l.rx.num_antennas + 1)) * l.rx.spacing;
        const double rt[3] = {0.0, 0.0, zt}, rr[3] = {l.distance, 0.0, zr};
        double D2 = 0;
        for (int i = 0; i < 3; ++i)
            D2 += (rr[i] - rt[i]) * (rr[i] - rt[i]);
        const double D = std::sqrt(D2), k0 = 2.0 * std::acos(-1.0) / l.wavelength;
        return l.rx.element_length / (4.0 * std::acos(-1.0)) * std::exp(cplx(0.0, -k0 * D)) / D;
    }

    inline double gk(const std::function<double(double)> &f, double a, double b)
    {
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
    }

    // (1/(4 pi)^2) int_{S_t} int_{S_r} dz_r dz_t / (d^2 + (z_t - z_r)^2), inner integral in
    // closed form (arctan), outer by adaptive Gauss-Kronrod
    inline double channel_power_arctan(double lt, double lr, double d)
    {
        const double c = 1.0 / (16.0 * std::acos(-1.0) * std::acos(-1.0));
        auto inner = [&](double zt)
        { return (std::atan((zt + lr / 2) / d) - std::atan((zt - lr / 2) / d)) / d; };
        return c * gk(inner, -lt / 2, lt / 2);
    }

    // Kernel power of the banded surface integral in (s, t) = ((x + y)/2, y - x) coordinates.
    // The s-integral of (c0 L_r / (d^2 + s^2))^2 has a closed form.
    inline double kernel_power_band(double lt, double lr, double d, double lambda, bool full_square)
    {
        const double c = 1.0 / (16.0 * std::acos(-1.0) * std::acos(-1.0));
        const double h = lt / 2, w = full_square ? lt : std::min(lt, lambda * d / (2.0 * lr));
        auto F = [&](double s)
        { return s / (2 * d * d * (d * d + s * s)) + std::atan(s / d) / (2 * d * d * d); };
        auto outer = [&](double t)
        { return 2.0 * F(h - t / 2); };
        return c * c * lr * lr * 2.0 * gk(outer, 0.0, w);
    }
}

#endif
