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

#ifndef NFMIMO_CONTINUOUS_HPP
#define NFMIMO_CONTINUOUS_HPP

#include "discrete.hpp"
#include "error.hpp"
#include "physics.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nfmimo
{
    // Two parallel line apertures of lengths L_t >= L_r at broadside distance d
    struct ContinuousLink
    {
        double tx_length = 0.0;  // L_t [m]
        double rx_length = 0.0;  // L_r [m]
        double distance = 0.0;   // d [m]
        double wavelength = 0.0; // lambda [m]
    };

    inline ContinuousLink make_continuous_link(const SystemConfig &cfg, double d)
    {
        if (!cfg.has_continuous())
            throw config_error("missing-continuous", "configuration has no continuous aperture pair");
        return {*cfg.continuous_tx_length, *cfg.continuous_rx_length, d, cfg.wavelength()};
    }

    inline void validate_link(const ContinuousLink &link)
    {
        std::vector<Issue> err;
        if (!(link.rx_length > 0.0) || !(link.tx_length > 0.0))
            err.push_back({"nonpositive-aperture", "continuous aperture lengths must be positive"});
        else if (link.tx_length < link.rx_length)
            err.push_back({"aperture-order", "transmit aperture L_t must not be shorter than receive aperture L_r; swap the two lengths"});
        if (!(link.distance > 0.0) || !std::isfinite(link.distance))
            err.push_back({"nonpositive-distance", "link distance must be positive"});
        if (!(link.wavelength > 0.0) || !std::isfinite(link.wavelength))
            err.push_back({"nonpositive-wavelength", "wavelength must be positive"});
        if (!err.empty())
            throw config_error(std::move(err));
    }

    enum class FieldBranch
    {
        near,
        far
    };

    // EDoF-based near/far boundary d_F = 2 L_t L_r / lambda
    inline double field_boundary(const ContinuousLink &link)
    {
        validate_link(link);
        return 2.0 * link.tx_length * link.rx_length / link.wavelength;
    }

    // Classic Fraunhofer distance 2 (L_t + L_r)^2 / lambda, reported for comparison only
    inline double rayleigh_distance(const ContinuousLink &link)
    {
        const double D = link.tx_length + link.rx_length;
        return 2.0 * D * D / link.wavelength;
    }

    inline FieldBranch field_branch(const ContinuousLink &link)
    {
        return link.distance <= field_boundary(link) ? FieldBranch::near : FieldBranch::far;
    }

    // v(d) = ln[((L_t+L_r)^2 + 4d^2) / ((L_t-L_r)^2 + 4d^2)], in log1p form so the ratio
    // does not cancel at large d
    inline double log_ratio(const ContinuousLink &link)
    {
        const double lt = link.tx_length, lr = link.rx_length, d = link.distance;
        const double diff = lt - lr;
        return std::log1p(4.0 * lt * lr / (diff * diff + 4.0 * d * d));
    }

    // Overall channel power c0 (2 L_t L_r / d^2 - v(d))
    inline double channel_power_continuous(const ContinuousLink &link)
    {
        validate_link(link);
        const double d = link.distance;
        return c0 * (2.0 * link.tx_length * link.rx_length / (d * d) - log_ratio(link));
    }

    // Large-distance limit c0 L_t L_r / d^2
    inline double channel_power_farfield(const ContinuousLink &link)
    {
        validate_link(link);
        return c0 * link.tx_length * link.rx_length / (link.distance * link.distance);
    }

    // Direct double integral of |G|^2 over both apertures (no Taylor step)
    inline double channel_power_quadrature(const ContinuousLink &link)
    {
        validate_link(link);
        const double ht = 0.5 * link.tx_length, hr = 0.5 * link.rx_length, d2 = link.distance * link.distance;
        const double v = quad::integrate_2d([&](double zt, double zr)
                                            { const double dz = zt - zr; return 1.0 / (d2 + dz * dz); },
                                            {-ht, ht}, [&](double)
                                            { return -hr; },
                                            [&](double)
                                            { return hr; },
                                            "channel_power_quadrature");
        return c0 * v;
    }

    // Density of |z_t - z_r| for independent uniform points on the two apertures
    inline double aperture_offset_pdf(double z, double tx_length, double rx_length)
    {
        const double u1 = 0.5 * (tx_length - rx_length), u2 = 0.5 * (tx_length + rx_length);
        if (z < 0.0 || z > u2)
            return 0.0;
        if (z <= u1)
            return 2.0 / tx_length;
        return (tx_length + rx_length - 2.0 * z) / (tx_length * rx_length);
    }

    // Same integral reduced to one dimension through the offset density
    inline double channel_power_quadrature_pdf(const ContinuousLink &link)
    {
        validate_link(link);
        const double lt = link.tx_length, lr = link.rx_length, d2 = link.distance * link.distance;
        const double u1 = 0.5 * (lt - lr), u2 = 0.5 * (lt + lr);
        auto f = [&](double z)
        { return aperture_offset_pdf(z, lt, lr) / (d2 + z * z); };
        double v = quad::integrate(f, u1, u2, "channel_power_quadrature_pdf");
        if (u1 > 0.0)
            v += quad::integrate(f, 0.0, u1, "channel_power_quadrature_pdf");
        return c0 * lt * lr * v;
    }

    struct KernelPower
    {
        double value = 0.0; // J0
        FieldBranch branch = FieldBranch::near;
    };

    // Closed-form kernel power J0:
    //   near (d <= d_F): c0^2 (L_t L_r lambda / d^3 - lambda^2 / (4 d^2))
    //   far  (d >  d_F): c0^2 (L_t L_r)^2 / d^4
    inline KernelPower kernel_power(const ContinuousLink &link)
    {
        const auto branch = field_branch(link);
        const double lt = link.tx_length, lr = link.rx_length, d = link.distance, lambda = link.wavelength;
        if (branch == FieldBranch::near)
            return {c0 * c0 * (lt * lr * lambda / (d * d * d) - lambda * lambda / (4.0 * d * d)), branch};
        const double a = lt * lr / (d * d);
        return {c0 * c0 * a * a, branch};
    }

    // Surface integral of the banded kernel-power approximation (c0 L_r / (d^2 + ((x+y)/2)^2))^2.
    // Near field: band |y - x| <= lambda d / (2 L_r) inside the transmit square. Far field:
    // the whole square.
    inline double kernel_power_quadrature(const ContinuousLink &link)
    {
        const auto branch = field_branch(link);
        const double lt = link.tx_length, lr = link.rx_length, d2 = link.distance * link.distance;
        const double h = 0.5 * lt;
        const double w = branch == FieldBranch::near ? link.wavelength * link.distance / (2.0 * lr) : lt;

        auto f = [&](double x, double y)
        {
            const double g = 0.5 * (x + y);
            const double k = c0 * lr / (d2 + g * g);
            return k * k;
        };

        std::vector<double> breaks{-h, h};
        if (w < lt)
            breaks = {-h, std::min(h, -h + w), std::max(-h, h - w), h};
        std::sort(breaks.begin(), breaks.end());

        return quad::integrate_2d(f, breaks, [&](double x)
                                  { return std::max(-h, x - w); },
                                  [&](double x)
                                  { return std::min(h, x + w); },
                                  "kernel_power_quadrature");
    }

    // Continuous-aperture EDoF
    //   u(d) = (2 L_t L_r - d^2 v(d))^2 / (L_t L_r lambda d - lambda^2 d^2 / 4)   for d <= d_F
    //   1                                                                            otherwise
    // paired with the channel power of the same branch.
    inline EdofResult edof_continuous(const ContinuousLink &link)
    {
        const auto branch = field_branch(link);
        EdofResult r;
        r.method = EdofMethod::closed_form;
        if (branch == FieldBranch::far)
        {
            r.edof = 1.0;
            r.channel_power = channel_power_farfield(link);
            return r;
        }
        const double lt = link.tx_length, lr = link.rx_length, d = link.distance, lambda = link.wavelength;
        const double num = 2.0 * lt * lr - d * d * log_ratio(link);
        r.edof = num * num / (lt * lr * lambda * d - lambda * lambda * d * d / 4.0);
        r.channel_power = channel_power_continuous(link);
        return r;
    }

    // Capacity over the EDoF-equivalent SISO channels for the branch at d
    inline double capacity_closed_continuous(const ContinuousLink &link, double rho)
    {
        return capacity_from_edof(edof_continuous(link), rho);
    }
}

#endif
