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

#ifndef NFMIMO_PHYSICS_HPP
#define NFMIMO_PHYSICS_HPP

#include "error.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nfmimo
{
    inline constexpr double speed_of_light = 299792458.0; // [m/s], exact
    inline constexpr double pi = std::numbers::pi;

    // Free-space Green's function normalization 1/(4 pi)^2
    inline constexpr double c0 = 1.0 / (16.0 * pi * pi);

    // Wavelength in [m] for a carrier frequency in [Hz]
    inline double wavelength(double frequency)
    {
        if (!(frequency > 0.0) || !std::isfinite(frequency))
            throw domain_error("wavelength: frequency must be positive and finite, got " + std::to_string(frequency));
        return speed_of_light / frequency;
    }

    // Wavenumber k0 = 2 pi / lambda in [rad/m]
    inline double wavenumber(double frequency)
    {
        return 2.0 * pi / wavelength(frequency);
    }

    inline double dbm_to_watts(double p_dbm)
    {
        return std::pow(10.0, (p_dbm - 30.0) / 10.0);
    }

    // Uniform linear array; elements sit at z = (n - (N+1)/2) q along the array axis
    struct DiscreteArray
    {
        int num_antennas = 1;
        double spacing = 0.0;        // q [m]
        double element_length = 0.0; // l_e [m], 0 < l_e <= q

        double beta() const { return element_length / spacing; }
        bool operator==(const DiscreteArray &) const = default;
    };

    // Receivers are dropped uniformly over the annulus d1 <= d <= d2
    struct DeploymentRing
    {
        double inner_radius = 0.0; // d1 [m]
        double outer_radius = 0.0; // d2 [m]

        double area_factor() const { return outer_radius * outer_radius - inner_radius * inner_radius; } // A_r
        double width() const { return outer_radius - inner_radius; }                                    // Delta d
        bool operator==(const DeploymentRing &) const = default;
    };

    // All quantities in SI units except the two powers, which stay in dBm at this boundary
    struct SystemConfig
    {
        double frequency = 28e9;           // [Hz]
        double transmit_power_dbm = 10.0;  // P
        double noise_power_dbm = -90.0;    // N0
        std::optional<DiscreteArray> discrete_tx;
        std::optional<DiscreteArray> discrete_rx;
        std::optional<double> continuous_tx_length; // L_t [m]
        std::optional<double> continuous_rx_length; // L_r [m]
        std::optional<DeploymentRing> ring;

        double wavelength() const { return nfmimo::wavelength(frequency); }
        double transmit_power() const { return dbm_to_watts(transmit_power_dbm); }
        double noise_power() const { return dbm_to_watts(noise_power_dbm); }
        double snr() const { return transmit_power() / noise_power(); } // rho = P / N0

        bool has_discrete() const { return discrete_tx.has_value() && discrete_rx.has_value(); }
        bool has_continuous() const { return continuous_tx_length.has_value() && continuous_rx_length.has_value(); }

        bool operator==(const SystemConfig &) const = default;
    };

    // Distance below which the paraxial expansion behind the discrete closed forms loses accuracy
    inline double paraxial_limit(const DiscreteArray &tx)
    {
        return 1.2 * tx.spacing * tx.num_antennas;
    }

    struct Validation
    {
        std::optional<SystemConfig> config; // Set iff errors is empty
        std::vector<Issue> errors;
        std::vector<Issue> warnings;

        bool ok() const { return errors.empty(); }
    };

    namespace detail
    {
        inline void check_array(const DiscreteArray &a, const std::string &side, std::vector<Issue> &errors)
        {
            if (a.num_antennas < 1)
                errors.push_back({"array-size", side + " array needs at least one antenna"});
            if (!(a.spacing > 0.0) || !std::isfinite(a.spacing))
                errors.push_back({"nonpositive-spacing", side + " antenna spacing must be positive"});
            if (!(a.element_length > 0.0) || !std::isfinite(a.element_length))
                errors.push_back({"nonpositive-element-length", side + " element length must be positive"});
            else if (a.element_length > a.spacing)
                errors.push_back({"element-length-exceeds-spacing", side + " element length exceeds spacing"});
        }
    }

    // Checks every configuration invariant. Evaluation distances only produce warnings.
    inline Validation validate_config(const SystemConfig &cfg, std::span<const double> distances = {})
    {
        Validation out;
        auto &err = out.errors;

        if (!(cfg.frequency > 0.0) || !std::isfinite(cfg.frequency))
            err.push_back({"nonpositive-frequency", "carrier frequency must be positive"});
        if (!std::isfinite(cfg.transmit_power_dbm) || !std::isfinite(cfg.noise_power_dbm))
            err.push_back({"nonfinite-power", "transmit and noise powers must be finite"});

        if (cfg.discrete_tx.has_value() != cfg.discrete_rx.has_value())
            err.push_back({"incomplete-discrete-pair", "discrete arrays must be given for both ends of the link"});
        if (cfg.continuous_tx_length.has_value() != cfg.continuous_rx_length.has_value())
            err.push_back({"incomplete-continuous-pair", "continuous apertures must be given for both ends of the link"});
        if (!cfg.has_discrete() && !cfg.has_continuous())
            err.push_back({"no-array-family", "at least one of the discrete or continuous array pairs is required"});

        if (cfg.has_discrete())
        {
            detail::check_array(*cfg.discrete_tx, "transmit", err);
            detail::check_array(*cfg.discrete_rx, "receive", err);
            if (cfg.discrete_tx->spacing != cfg.discrete_rx->spacing)
                err.push_back({"spacing-mismatch", "transmit and receive arrays must share the antenna spacing"});
        }

        if (cfg.has_continuous())
        {
            const double lt = *cfg.continuous_tx_length, lr = *cfg.continuous_rx_length;
            if (!(lt > 0.0) || !(lr > 0.0) || !std::isfinite(lt) || !std::isfinite(lr))
                err.push_back({"nonpositive-aperture", "continuous aperture lengths must be positive"});
            else if (lt < lr)
                err.push_back({"aperture-order", "transmit aperture L_t must not be shorter than receive aperture L_r; swap the two lengths"});
        }

        if (cfg.ring)
        {
            if (!(cfg.ring->inner_radius > 0.0))
                err.push_back({"nonpositive-inner-radius", "ring inner radius must be positive"});
            if (!(cfg.ring->inner_radius < cfg.ring->outer_radius))
                err.push_back({"degenerate-ring", "degenerate ring: inner radius must be below outer radius"});
        }

        if (!err.empty())
            return out;

        const double lambda = cfg.wavelength();
        for (double d : distances)
        {
            if (cfg.has_discrete() && d < paraxial_limit(*cfg.discrete_tx))
                out.warnings.push_back({"paraxial-validity",
                                        "distance " + std::to_string(d) + " m is below 1.2 q N_t = " +
                                            std::to_string(paraxial_limit(*cfg.discrete_tx)) + " m"});
            if (d < 10.0 * lambda)
                out.warnings.push_back({"reactive-near-field",
                                        "distance " + std::to_string(d) + " m is below 10 wavelengths"});
        }
        out.config = cfg;
        return out;
    }

    // Returns the config unchanged or throws config_error listing every violation
    inline SystemConfig validated(const SystemConfig &cfg)
    {
        auto v = validate_config(cfg);
        if (!v.ok())
            throw config_error(std::move(v.errors));
        return *v.config;
    }
}

#endif
