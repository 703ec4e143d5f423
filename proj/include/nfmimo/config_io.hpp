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

#ifndef NFMIMO_CONFIG_IO_HPP
#define NFMIMO_CONFIG_IO_HPP

#include "error.hpp"
#include "physics.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace nfmimo
{
    // Flat key = value configuration. Lines starting with '#' are comments.
    //
    //   frequency_ghz   carrier frequency [GHz]              (required)
    //   p_dbm           transmit power [dBm]                 (required)
    //   n0_dbm          noise power [dBm]                    (required)
    //   nt, nr          antenna counts                       (discrete group)
    //   q_over_lambda   antenna spacing in wavelengths       (discrete group)
    //   le_over_q       element length as a fraction of q    (discrete group)
    //   lt_over_lambda  transmit aperture in wavelengths     (continuous group)
    //   lr_over_lambda  receive aperture in wavelengths      (continuous group)
    //   d1_m, d2_m      deployment ring radii [m]            (ring group)
    //
    // Keys of a group must appear together; unknown keys are rejected.
    struct ConfigDocument
    {
        std::map<std::string, double> values;
        bool operator==(const ConfigDocument &) const = default;
    };

    namespace config_keys
    {
        inline const std::array<std::string_view, 3> required{"frequency_ghz", "p_dbm", "n0_dbm"};
        inline const std::array<std::string_view, 4> discrete{"nt", "nr", "q_over_lambda", "le_over_q"};
        inline const std::array<std::string_view, 2> continuous{"lt_over_lambda", "lr_over_lambda"};
        inline const std::array<std::string_view, 2> ring{"d1_m", "d2_m"};

        inline bool known(std::string_view k)
        {
            for (auto group : {std::span<const std::string_view>(required), std::span<const std::string_view>(discrete),
                               std::span<const std::string_view>(continuous), std::span<const std::string_view>(ring)})
                for (auto g : group)
                    if (g == k)
                        return true;
            return false;
        }
    }

    namespace detail
    {
        inline std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }
    }

    inline ConfigDocument parse_config_document(std::string_view text)
    {
        ConfigDocument doc;
        std::vector<Issue> err;
        std::size_t line_no = 0;
        std::istringstream in{std::string(text)};
        for (std::string raw; std::getline(in, raw);)
        {
            ++line_no;
            const auto line = detail::trim(raw);
            if (line.empty() || line.front() == '#')
                continue;
            const std::string where = "line " + std::to_string(line_no);
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
            {
                err.push_back({"parse-error", where + ": expected 'key = value'"});
                continue;
            }
            const std::string key(detail::trim(line.substr(0, eq)));
            const auto value_text = detail::trim(line.substr(eq + 1));
            if (!config_keys::known(key))
            {
                err.push_back({"unknown-key", where + ": unknown key '" + key + "'"});
                continue;
            }
            if (doc.values.count(key))
            {
                err.push_back({"duplicate-key", where + ": key '" + key + "' given twice"});
                continue;
            }
            double v = 0.0;
            const auto res = std::from_chars(value_text.data(), value_text.data() + value_text.size(), v);
            if (res.ec != std::errc() || res.ptr != value_text.data() + value_text.size() || !std::isfinite(v))
            {
                err.push_back({"invalid-value", where + ": key '" + key + "' has non-numeric value '" +
                                                    std::string(value_text) + "'"});
                continue;
            }
            if ((key == "nt" || key == "nr") && (v != std::floor(v) || v < 1.0 || v > 1e6))
            {
                err.push_back({"invalid-value", where + ": key '" + key + "' must be a positive integer"});
                continue;
            }
            doc.values[key] = v;
        }

        for (auto k : config_keys::required)
            if (!doc.values.count(std::string(k)))
                err.push_back({"missing-key", "required key '" + std::string(k) + "' is missing"});

        auto check_group = [&](std::span<const std::string_view> group, const char *name)
        {
            std::size_t present = 0;
            for (auto k : group)
                present += doc.values.count(std::string(k));
            if (present == 0 || present == group.size())
                return;
            for (auto k : group)
                if (!doc.values.count(std::string(k)))
                    err.push_back({"missing-key", std::string(name) + " key '" + std::string(k) + "' is missing"});
        };
        check_group(config_keys::discrete, "discrete");
        check_group(config_keys::continuous, "continuous");
        check_group(config_keys::ring, "ring");

        if (!err.empty())
            throw config_error(std::move(err));
        return doc;
    }

    // Resolves wavelength-relative lengths and validates the result
    inline SystemConfig to_system_config(const ConfigDocument &doc)
    {
        const auto &v = doc.values;
        SystemConfig cfg;
        cfg.frequency = v.at("frequency_ghz") * 1e9;
        cfg.transmit_power_dbm = v.at("p_dbm");
        cfg.noise_power_dbm = v.at("n0_dbm");

        if (!(cfg.frequency > 0.0))
            throw config_error("nonpositive-frequency", "carrier frequency must be positive");
        const double lambda = cfg.wavelength();

        if (v.count("nt"))
        {
            const double q = v.at("q_over_lambda") * lambda;
            const double le = v.at("le_over_q") * q;
            cfg.discrete_tx = DiscreteArray{static_cast<int>(v.at("nt")), q, le};
            cfg.discrete_rx = DiscreteArray{static_cast<int>(v.at("nr")), q, le};
        }
        if (v.count("lt_over_lambda"))
        {
            cfg.continuous_tx_length = v.at("lt_over_lambda") * lambda;
            cfg.continuous_rx_length = v.at("lr_over_lambda") * lambda;
        }
        if (v.count("d1_m"))
            cfg.ring = DeploymentRing{v.at("d1_m"), v.at("d2_m")};
        return validated(cfg);
    }

    inline std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw io_error("cannot open '" + path.string() + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    inline ConfigDocument load_config_document(const std::filesystem::path &path)
    {
        return parse_config_document(read_text_file(path));
    }

    inline SystemConfig load_config(const std::filesystem::path &path)
    {
        return to_system_config(load_config_document(path));
    }
}

#endif
