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

#ifndef NFMIMO_DISCRETE_HPP
#define NFMIMO_DISCRETE_HPP

#include "error.hpp"
#include "linalg.hpp"
#include "physics.hpp"

#include <boost/math/special_functions/lambert_w.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace nfmimo
{
    // Two parallel ULAs facing each other at broadside distance d
    struct DiscreteLink
    {
        DiscreteArray tx;
        DiscreteArray rx;
        double distance = 0.0;   // d [m]
        double wavelength = 0.0; // lambda [m]

        double wavenumber() const { return 2.0 * pi / wavelength; }
        // l_e of the receiving elements is the aperture entering the channel gain
        double element_length() const { return rx.element_length; }
    };

    inline DiscreteLink make_discrete_link(const SystemConfig &cfg, double d)
    {
        if (!cfg.has_discrete())
            throw config_error("missing-discrete", "configuration has no discrete array pair");
        return {*cfg.discrete_tx, *cfg.discrete_rx, d, cfg.wavelength()};
    }

    inline void validate_link(const DiscreteLink &link)
    {
        std::vector<Issue> err;
        detail::check_array(link.tx, "transmit", err);
        detail::check_array(link.rx, "receive", err);
        if (link.tx.spacing != link.rx.spacing)
            err.push_back({"spacing-mismatch", "transmit and receive arrays must share the antenna spacing"});
        if (!(link.distance > 0.0) || !std::isfinite(link.distance))
            err.push_back({"nonpositive-distance", "link distance must be positive"});
        if (!(link.wavelength > 0.0) || !std::isfinite(link.wavelength))
            err.push_back({"nonpositive-wavelength", "wavelength must be positive"});
        if (!err.empty())
            throw config_error(std::move(err));
    }

    // Non-fatal accuracy warnings for a link
    inline std::vector<Issue> link_warnings(const DiscreteLink &link)
    {
        std::vector<Issue> w;
        if (link.distance < paraxial_limit(link.tx))
            w.push_back({"paraxial-validity", "distance below 1.2 q N_t; closed forms lose accuracy"});
        if (link.distance < 10.0 * link.wavelength)
            w.push_back({"reactive-near-field", "distance below 10 wavelengths"});
        return w;
    }

    // N_r x N_t Green's-function channel using exact element-to-element distances
    inline ComplexMatrix build_channel(const DiscreteLink &link)
    {
        validate_link(link);
        const int nt = link.tx.num_antennas, nr = link.rx.num_antennas;
        const double q = link.tx.spacing, d2 = link.distance * link.distance;
        const double k0 = link.wavenumber();
        const double amplitude = link.element_length() / (4.0 * pi);
        const double offset = 0.5 * static_cast<double>(nt - nr);

        return ComplexMatrix::generate(nr, nt, [&](std::size_t n, std::size_t m)
                                       {
                                           const double dz = (static_cast<double>(m) - static_cast<double>(n) - offset) * q;
                                           const double D = std::sqrt(d2 + dz * dz);
                                           return std::polar(amplitude / D, -k0 * D); });
    }

    // Overall channel power tr(H* H)
    inline double channel_power(const ComplexMatrix &H)
    {
        return H.frobenius_norm_sq();
    }

    enum class EdofMethod
    {
        closed_form,
        numeric
    };

    struct EdofResult
    {
        double edof = 1.0;          // epsilon
        double channel_power = 0.0; // tr(R), dimensionless
        EdofMethod method = EdofMethod::numeric;
        bool exceeds_min_dimension = false; // epsilon > min(N_t, N_r)
    };

    // (tr R)^2 / tr(R^2) from the exact channel. The smaller Gram matrix has the same
    // nonzero spectrum, so it is used for both traces.
    inline EdofResult edof_numeric(const ComplexMatrix &H)
    {
        const auto G = H.rows() <= H.cols() ? row_gram(H) : gram(H);
        const double tr = trace(G).real();
        const double tr_sq = G.frobenius_norm_sq();
        if (!(tr > 0.0) || !(tr_sq > 0.0))
            throw domain_error("edof_numeric: channel matrix is zero");
        EdofResult r{tr * tr / tr_sq, tr, EdofMethod::numeric, false};
        r.exceeds_min_dimension = r.edof > static_cast<double>(std::min(H.rows(), H.cols()));
        return r;
    }

    // sin^2(N x) / sin^2(x), continuous at the poles x = k pi where it tends to N^2
    inline double dirichlet_ratio(double x, int N)
    {
        const double s = std::sin(x);
        const double n = static_cast<double>(N);
        if (std::abs(s) < 1e-9)
            return n * n;
        const double r = std::sin(n * x) / s;
        return r * r;
    }

    // Double sum over transmit element pairs of the receive-array Dirichlet ratio.
    // Terms depend only on m1 - m2, so the sum folds to O(N_t) weighted terms.
    inline double array_factor_sum(const DiscreteLink &link)
    {
        const int nt = link.tx.num_antennas, nr = link.rx.num_antennas;
        const double q = link.tx.spacing;
        const double step = q * q * link.wavenumber() / (2.0 * link.distance);
        double off = 0.0;
        for (int delta = 1; delta < nt; ++delta)
            off += static_cast<double>(nt - delta) * dirichlet_ratio(step * delta, nr);
        return static_cast<double>(nt) * static_cast<double>(nr) * static_cast<double>(nr) + 2.0 * off;
    }

    // Closed-form EDoF (N_t N_r)^2 / phi(d) with the paraxial channel power l_e^2 N_t N_r / (4 pi d)^2
    inline EdofResult edof_closed(const DiscreteLink &link)
    {
        validate_link(link);
        const double ntnr = static_cast<double>(link.tx.num_antennas) * static_cast<double>(link.rx.num_antennas);
        const double le = link.element_length();
        EdofResult r;
        r.edof = ntnr * ntnr / array_factor_sum(link);
        r.channel_power = c0 * le * le * ntnr / (link.distance * link.distance);
        r.method = EdofMethod::closed_form;
        r.exceeds_min_dimension = r.edof > static_cast<double>(std::min(link.tx.num_antennas, link.rx.num_antennas));
        return r;
    }

    // Ground-truth capacity by water-filling over the exact singular spectrum
    inline double exact_capacity(const ComplexMatrix &H, double P, double N0)
    {
        return water_fill(singular_values(H), P, N0).capacity;
    }

    // epsilon identical SISO channels sharing the channel power: eps log2(1 + tr(R) rho / eps^2)
    inline double capacity_from_edof(const EdofResult &e, double rho)
    {
        if (!(e.edof >= 1.0 - 1e-12) || !(e.channel_power > 0.0) || !(rho > 0.0))
            throw domain_error("capacity_from_edof: requires edof >= 1, positive channel power and SNR");
        return e.edof * std::log1p(e.channel_power * rho / (e.edof * e.edof)) / std::numbers::ln2;
    }

    // Closed-form discrete capacity at distance d.
    //
    // The default form carries the l_e^2 factor of the channel power, so it is exactly
    // capacity_from_edof(edof_closed(link), rho). With strict_printed_form the l_e^2 factor
    // is dropped, matching the expression as usually printed (equivalent to l_e = 1 m).
    inline double capacity_closed_discrete(const DiscreteLink &link, double rho, bool strict_printed_form = false)
    {
        const auto e = edof_closed(link);
        if (!strict_printed_form)
            return capacity_from_edof(e, rho);

        const double ntnr = static_cast<double>(link.tx.num_antennas) * static_cast<double>(link.rx.num_antennas);
        const double phi = array_factor_sum(link);
        const double d2 = link.distance * link.distance;
        return e.edof * std::log1p(c0 * phi * phi * rho / (d2 * ntnr * ntnr * ntnr)) / std::numbers::ln2;
    }

    // (Eb/N0)_min = eps ln2 / tr(R)
    inline double min_bit_snr(const EdofResult &e)
    {
        if (!(e.channel_power > 0.0))
            throw domain_error("min_bit_snr: channel power must be positive");
        return e.edof * std::numbers::ln2 / e.channel_power;
    }

    // Bit SNR needed to sustain capacity C over eps equal SISO channels:
    // Eb/N0 = (2^{C/eps} - 1) / ((C/eps)(tr R / eps))
    inline double bit_snr_at_capacity(const EdofResult &e, double C)
    {
        if (!(C > 0.0))
            return min_bit_snr(e);
        const double y = C / e.edof;
        return std::expm1(y * std::numbers::ln2) / (y * e.channel_power / e.edof);
    }

    // Inverse of bit_snr_at_capacity. With r = (Eb/N0) / (Eb/N0)_min and a = (C/eps) ln2 the
    // relation is (e^a - 1)/a = r, solved on the nontrivial Lambert-W branch.
    inline double capacity_at_bit_snr(const EdofResult &e, double ebn0)
    {
        const double r = ebn0 / min_bit_snr(e);
        if (r < 1.0)
            throw domain_error("capacity_at_bit_snr: bit SNR is below the minimum for reliable communication");
        if (r == 1.0)
            return 0.0;
        const double w = boost::math::lambert_wm1(-std::exp(-1.0 / r) / r);
        double a = (-r * w - 1.0) / r;
        // W_{-1} is ill-conditioned next to the branch point (r -> 1); polish on expm1(a) = r a
        for (int it = 0; it < 3; ++it)
        {
            const double g = std::expm1(a) - r * a, dg = std::exp(a) - r;
            if (dg == 0.0)
                break;
            a -= g / dg;
        }
        return e.edof * a / std::numbers::ln2;
    }

    // Low-power linear law C = S (log2 Eb/N0 - log2 (Eb/N0)_min)
    inline double capacity_low_power_linear(const EdofResult &e, double slope, double ebn0)
    {
        return slope * (std::log2(ebn0) - std::log2(min_bit_snr(e)));
    }
}

#endif
