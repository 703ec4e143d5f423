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

#ifndef NFMIMO_EXPERIMENTS_HPP
#define NFMIMO_EXPERIMENTS_HPP

#include "config_io.hpp"
#include "continuous.hpp"
#include "csv.hpp"
#include "discrete.hpp"
#include "ergodic.hpp"
#include "error.hpp"
#include "version.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfmimo::experiments
{
    enum class Preset
    {
        edof_sweep,
        capacity_sweep,
        ergodic_power,
        ergodic_beta,
        singular_spectrum,
        field_boundary
    };

    inline const std::vector<std::pair<Preset, std::string>> &preset_names()
    {
        static const std::vector<std::pair<Preset, std::string>> names{
            {Preset::edof_sweep, "edof-sweep"},
            {Preset::capacity_sweep, "capacity-sweep"},
            {Preset::ergodic_power, "ergodic-power"},
            {Preset::ergodic_beta, "ergodic-beta"},
            {Preset::singular_spectrum, "singular-spectrum"},
            {Preset::field_boundary, "field-boundary"}};
        return names;
    }

    inline std::string preset_name(Preset p)
    {
        for (const auto &[k, v] : preset_names())
            if (k == p)
                return v;
        return "unknown";
    }

    inline Preset parse_preset(const std::string &name)
    {
        for (const auto &[k, v] : preset_names())
            if (v == name)
                return k;
        throw config_error("unknown-preset", "unknown experiment preset '" + name + "'");
    }

    struct RunOptions
    {
        std::uint64_t seed = 1;
        std::size_t mc_samples = 1000000;
        std::size_t quad_m = 50;
        bool strict_printed_form = false;
        std::size_t sweep_points = 200;                                                    // capacity-sweep grid size
        std::vector<std::pair<int, double>> spectrum_pairs{{100, 5.0}, {100, 15.0}, {200, 5.0}, {200, 15.0}}; // (N, d [m])
    };

    struct OutputFile
    {
        std::string file; // Relative to the output directory
        std::vector<std::string> columns;
        std::map<std::string, std::string> provenance;
    };

    struct RunManifest
    {
        Preset preset = Preset::field_boundary;
        ConfigDocument config;
        RunOptions options;
        std::string code_version = NFMIMO_VERSION;
        std::string timestamp;
        std::vector<OutputFile> outputs;
        std::map<std::string, double> summary;
        std::vector<std::string> warnings;
        std::vector<std::string> notes;
    };

    // Everything a preset computes, before anything touches the filesystem
    struct PresetResult
    {
        std::vector<CapacityCurve> curves;
        std::map<std::string, double> summary;
        std::vector<std::string> warnings;
        std::vector<std::string> notes;
    };

    namespace detail
    {
        inline std::vector<double> log_grid(double lo, double hi, std::size_t n)
        {
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i)
                g[i] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
            return g;
        }

        inline std::string label(double v)
        {
            auto s = format_number(v);
            for (auto &ch : s)
                if (ch == '.')
                    ch = 'p';
            return s;
        }

        // One line per warning code, summarizing the affected distances
        inline void add_warnings(PresetResult &r, const SystemConfig &cfg, const std::vector<double> &distances)
        {
            std::map<std::string, std::vector<double>> hits;
            for (double d : distances)
                for (const auto &w : validate_config(cfg, std::vector<double>{d}).warnings)
                    hits[w.code].push_back(d);
            for (const auto &[code, ds] : hits)
            {
                const auto [lo, hi] = std::minmax_element(ds.begin(), ds.end());
                std::string text = code + ": " + std::to_string(ds.size()) + " of " + std::to_string(distances.size()) +
                                   " distances in [" + format_number(*lo) + ", " + format_number(*hi) + "] m";
                text += code == "paraxial-validity" ? " are below 1.2 q N_t = " + format_number(paraxial_limit(*cfg.discrete_tx)) + " m"
                                                    : " are below 10 wavelengths";
                if (std::find(r.warnings.begin(), r.warnings.end(), text) == r.warnings.end())
                    r.warnings.push_back(text);
            }
        }

        // Half-wavelength sampled stand-in for the continuous apertures (l_e = q)
        inline DiscreteLink continuous_proxy(const SystemConfig &cfg, double d)
        {
            const double lambda = cfg.wavelength(), q = lambda / 2.0;
            const int nt = static_cast<int>(std::lround(*cfg.continuous_tx_length / q));
            const int nr = static_cast<int>(std::lround(*cfg.continuous_rx_length / q));
            return {{nt, q, q}, {nr, q, q}, d, lambda};
        }

        inline std::vector<DeploymentRing> rings(const SystemConfig &cfg, std::vector<std::string> &notes)
        {
            if (cfg.ring)
                return {*cfg.ring};
            notes.push_back("no d1_m/d2_m in config: default rings [5, 15] m and [5, 50] m (artifact choice)");
            return {{5.0, 15.0}, {5.0, 50.0}};
        }

        inline std::string ring_label(const DeploymentRing &r)
        {
            return "d1_" + label(r.inner_radius) + "m_d2_" + label(r.outer_radius) + "m";
        }

        inline void require_family(const SystemConfig &cfg, bool continuous, const std::string &preset)
        {
            if (continuous && !cfg.has_continuous())
                throw config_error("missing-continuous", preset + " needs lt_over_lambda and lr_over_lambda");
        }

        // Columns present for the discrete and continuous families of one ergodic sweep
        struct ErgodicColumns
        {
            std::vector<std::string> names;
            std::map<std::string, std::string> provenance;
        };

        inline ErgodicColumns ergodic_columns(const std::string &x_column, const SystemConfig &cfg)
        {
            ErgodicColumns c{{x_column}, {}};
            if (cfg.has_discrete())
            {
                c.names.insert(c.names.end(), {"discrete_closed_quadrature_bps_hz", "discrete_closed_mc_bps_hz", "discrete_water_filling_quadrature_bps_hz"});
                c.provenance["discrete_closed_quadrature_bps_hz"] = "Chebyshev-Gauss ergodic average of the discrete closed-form capacity";
                c.provenance["discrete_closed_mc_bps_hz"] = "Monte-Carlo average of the same conditional capacity (oracle)";
                c.provenance["discrete_water_filling_quadrature_bps_hz"] = "Chebyshev-Gauss average of exact water-filling capacity (oracle)";
            }
            if (cfg.has_continuous())
            {
                c.names.insert(c.names.end(), {"continuous_closed_quadrature_bps_hz", "continuous_closed_mc_bps_hz"});
                c.provenance["continuous_closed_quadrature_bps_hz"] = "Chebyshev-Gauss ergodic average split at d_F, continuous closed-form capacity";
                c.provenance["continuous_closed_mc_bps_hz"] = "Monte-Carlo average of the same conditional capacity (oracle)";
            }
            return c;
        }

        inline void ergodic_row(std::vector<double> &row, const SystemConfig &cfg, const DeploymentRing &ring,
                                double rho, double P, double N0, const RunOptions &opt,
                                std::map<double, SingularSpectrum> &spectra)
        {
            if (cfg.has_discrete())
            {
                auto closed = [&](double d)
                { return capacity_closed_discrete(make_discrete_link(cfg, d), rho, opt.strict_printed_form); };
                auto exact = [&](double d)
                {
                    auto it = spectra.find(d);
                    if (it == spectra.end())
                        it = spectra.emplace(d, singular_values(build_channel(make_discrete_link(cfg, d)))).first;
                    return water_fill(it->second, P, N0).capacity;
                };
                row.push_back(ergodic_capacity(closed, ring, opt.quad_m).capacity);
                row.push_back(ergodic_capacity_mc(closed, ring, opt.mc_samples, opt.seed).capacity);
                row.push_back(ergodic_capacity(exact, ring, opt.quad_m).capacity);
            }
            if (cfg.has_continuous())
            {
                auto closed = [&](double d)
                { return capacity_closed_continuous(make_continuous_link(cfg, d), rho); };
                const double dF = field_boundary(make_continuous_link(cfg, ring.inner_radius));
                row.push_back(ergodic_capacity(closed, ring, opt.quad_m, dF).capacity);
                row.push_back(ergodic_capacity_mc(closed, ring, opt.mc_samples, opt.seed).capacity);
            }
        }
    }

    // EDoF versus N_r at fixed apertures: q = L_r / N_r, N_t = N_r L_t / L_r
    inline PresetResult run_edof_sweep(const SystemConfig &cfg)
    {
        detail::require_family(cfg, true, "edof-sweep");
        PresetResult r;
        r.notes.push_back("N_r grid 5..100 step 5 and d in {5, 15} m are artifact choices");
        const double lambda = cfg.wavelength(), lt = *cfg.continuous_tx_length, lr = *cfg.continuous_rx_length;

        for (double d : {5.0, 15.0})
        {
            CapacityCurve c;
            c.name = "edof_sweep_d" + detail::label(d) + "m";
            c.columns = {"n_r", "n_t", "q_over_lambda", "edof_closed", "edof_numeric", "edof_continuous", "edof_continuous_quadrature"};
            c.provenance = {{"edof_closed", "discrete closed form (N_t N_r)^2 / phi(d)"},
                            {"edof_numeric", "(tr R)^2 / tr(R^2) of the exact Green's-function channel (oracle)"},
                            {"edof_continuous", "continuous-aperture closed form u(d), 1 beyond d_F"},
                            {"edof_continuous_quadrature", "(quadrature channel power)^2 / quadrature kernel power (oracle)"}};
            const auto cl = make_continuous_link(cfg, d);
            const double e_con = edof_continuous(cl).edof;
            const double p_q = channel_power_quadrature(cl);
            const double e_con_q = p_q * p_q / kernel_power_quadrature(cl);
            for (int nr = 5; nr <= 100; nr += 5)
            {
                const int nt = static_cast<int>(std::lround(nr * lt / lr));
                const double q = lr / nr;
                const DiscreteLink link{{nt, q, q}, {nr, q, q}, d, lambda};
                c.rows.push_back({double(nr), double(nt), q / lambda, edof_closed(link).edof,
                                  edof_numeric(build_channel(link)).edof, e_con, e_con_q});
            }
            r.curves.push_back(std::move(c));
        }
        return r;
    }

    inline PresetResult run_capacity_sweep(const SystemConfig &cfg, const RunOptions &opt)
    {
        PresetResult r;
        r.notes.push_back("distance grid: " + std::to_string(opt.sweep_points) + " log-spaced points on [1, 100] m (artifact choice)");
        const auto grid = detail::log_grid(1.0, 100.0, opt.sweep_points);
        detail::add_warnings(r, cfg, grid);
        const double P = cfg.transmit_power(), N0 = cfg.noise_power(), rho = cfg.snr();

        CapacityCurve c;
        c.name = "capacity_sweep";
        c.columns = {"d_m"};
        if (cfg.has_discrete())
        {
            c.columns.insert(c.columns.end(), {"water_filling_bps_hz", "water_filling_active_modes", "discrete_closed_bps_hz", "numeric_edof_bps_hz"});
            c.provenance["water_filling_bps_hz"] = "exact water-filling over the channel singular values (oracle)";
            c.provenance["water_filling_active_modes"] = "number of channels receiving power in the water-filling solution";
            c.provenance["discrete_closed_bps_hz"] = opt.strict_printed_form ? "discrete closed-form capacity, printed form without l_e^2"
                                                                         : "discrete closed-form capacity";
            c.provenance["numeric_edof_bps_hz"] = "EDoF capacity with the numeric EDoF and exact channel power";
        }
        if (cfg.has_continuous())
        {
            c.columns.insert(c.columns.end(), {"continuous_closed_bps_hz", "proxy_water_filling_bps_hz", "proxy_active_modes"});
            c.provenance["continuous_closed_bps_hz"] = "continuous-aperture closed-form capacity";
            c.provenance["proxy_water_filling_bps_hz"] = "water-filling on the half-wavelength sampled aperture proxy, l_e = q (oracle)";
            c.provenance["proxy_active_modes"] = "active water-filling channels of the proxy";
        }
        for (double d : grid)
        {
            std::vector<double> row{d};
            if (cfg.has_discrete())
            {
                const auto link = make_discrete_link(cfg, d);
                const auto H = build_channel(link);
                const auto wf = water_fill(singular_values(H), P, N0);
                row.insert(row.end(), {wf.capacity, double(wf.active_channels),
                                       capacity_closed_discrete(link, rho, opt.strict_printed_form),
                                       capacity_from_edof(edof_numeric(H), rho)});
            }
            if (cfg.has_continuous())
            {
                const auto wf = water_fill(singular_values(build_channel(detail::continuous_proxy(cfg, d))), P, N0);
                row.insert(row.end(), {capacity_closed_continuous(make_continuous_link(cfg, d), rho), wf.capacity,
                                       double(wf.active_channels)});
            }
            c.rows.push_back(std::move(row));
        }
        r.curves.push_back(std::move(c));
        return r;
    }

    inline PresetResult run_ergodic_power(const SystemConfig &cfg, const RunOptions &opt)
    {
        PresetResult r;
        r.notes.push_back("transmit power grid -10..30 dBm in 2 dB steps (artifact choice)");
        const auto cols = detail::ergodic_columns("p_dbm", cfg);
        for (const auto &ring : detail::rings(cfg, r.notes))
        {
            detail::add_warnings(r, cfg, {ring.inner_radius});
            CapacityCurve c{"ergodic_power_" + detail::ring_label(ring), cols.names, {}, cols.provenance};
            std::map<double, SingularSpectrum> spectra;
            for (int p_dbm = -10; p_dbm <= 30; p_dbm += 2)
            {
                auto pc = cfg;
                pc.transmit_power_dbm = p_dbm;
                std::vector<double> row{double(p_dbm)};
                detail::ergodic_row(row, pc, ring, pc.snr(), pc.transmit_power(), pc.noise_power(), opt, spectra);
                c.rows.push_back(std::move(row));
            }
            r.curves.push_back(std::move(c));
        }
        return r;
    }

    inline PresetResult run_ergodic_beta(const SystemConfig &cfg, const RunOptions &opt)
    {
        if (!cfg.has_discrete())
            throw config_error("missing-discrete", "ergodic-beta needs the discrete keys nt, nr, q_over_lambda, le_over_q");
        PresetResult r;
        r.notes.push_back("beta grid {1/16, 1/8, 1/4, 1/2, 1} applied to the receive elements (artifact choice)");
        const auto cols = detail::ergodic_columns("beta", cfg);
        for (const auto &ring : detail::rings(cfg, r.notes))
        {
            detail::add_warnings(r, cfg, {ring.inner_radius});
            CapacityCurve c{"ergodic_beta_" + detail::ring_label(ring), cols.names, {}, cols.provenance};
            for (double beta : {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0})
            {
                auto bc = cfg;
                bc.discrete_rx->element_length = beta * bc.discrete_rx->spacing;
                std::map<double, SingularSpectrum> spectra;
                std::vector<double> row{beta};
                detail::ergodic_row(row, bc, ring, bc.snr(), bc.transmit_power(), bc.noise_power(), opt, spectra);
                c.rows.push_back(std::move(row));
            }
            r.curves.push_back(std::move(c));
        }
        return r;
    }

    // Square N x N links across a fixed aperture (L_t when configured, else 100 lambda)
    inline PresetResult run_singular_spectrum(const SystemConfig &cfg, const RunOptions &opt)
    {
        PresetResult r;
        const double lambda = cfg.wavelength();
        const double aperture = cfg.has_continuous() ? *cfg.continuous_tx_length : 100.0 * lambda;
        if (!cfg.has_continuous())
            r.notes.push_back("aperture defaults to 100 lambda");

        CapacityCurve summary;
        summary.name = "singular_spectrum_summary";
        summary.columns = {"n", "d_m", "edof_closed", "edof_numeric", "numerical_rank", "water_filling_active_modes"};
        summary.provenance = {{"edof_closed", "discrete closed form"},
                              {"edof_numeric", "(tr R)^2 / tr(R^2) of the exact channel (oracle)"},
                              {"numerical_rank", "singular values above 1e-12 s_1"},
                              {"water_filling_active_modes", "active channels at the configured P and N0"}};
        for (const auto &[n, d] : opt.spectrum_pairs)
        {
            if (n < 1 || !(d > 0.0))
                throw config_error("invalid-pair", "singular-spectrum pairs need N >= 1 and d > 0");
            const double q = aperture / n;
            const DiscreteLink link{{n, q, q}, {n, q, q}, d, lambda};
            const auto H = build_channel(link);
            const auto s = singular_values(H);

            CapacityCurve c;
            c.name = "singular_spectrum_n" + std::to_string(n) + "_d" + detail::label(d) + "m";
            c.columns = {"index", "singular_value", "singular_value_normalized"};
            c.provenance = {{"singular_value", "exact singular values of the Green's-function channel"},
                            {"singular_value_normalized", "s_i / s_1"}};
            for (std::size_t i = 0; i < s.values.size(); ++i)
                c.rows.push_back({double(i + 1), s.values[i], s.values[i] / s.values.front()});
            r.curves.push_back(std::move(c));

            const auto wf = water_fill(s, cfg.transmit_power(), cfg.noise_power());
            summary.rows.push_back({double(n), d, edof_closed(link).edof, edof_numeric(H).edof,
                                    double(s.numerical_rank), double(wf.active_channels)});
        }
        r.curves.push_back(std::move(summary));
        return r;
    }

    inline PresetResult run_field_boundary(const SystemConfig &cfg)
    {
        detail::require_family(cfg, true, "field-boundary");
        PresetResult r;
        const double lambda = cfg.wavelength();
        const double dF = field_boundary(make_continuous_link(cfg, 1.0));
        r.summary["field_boundary_m"] = dF;
        r.summary["field_boundary_wavelengths"] = dF / lambda;
        r.summary["rayleigh_distance_m"] = rayleigh_distance(make_continuous_link(cfg, 1.0));

        auto grid = detail::log_grid(1.0, 10.0 * dF, 60);
        grid.push_back(dF);
        std::sort(grid.begin(), grid.end());

        CapacityCurve c;
        c.name = "field_boundary";
        c.columns = {"d_m", "d_over_dF", "branch_far", "edof_continuous", "edof_continuous_quadrature", "proxy_edof_numeric"};
        c.provenance = {{"branch_far", "1 when d > d_F"},
                        {"edof_continuous", "continuous-aperture closed form"},
                        {"edof_continuous_quadrature", "(quadrature channel power)^2 / quadrature kernel power (oracle)"},
                        {"proxy_edof_numeric", "numeric EDoF of the half-wavelength sampled proxy (oracle)"}};
        for (double d : grid)
        {
            const auto cl = make_continuous_link(cfg, d);
            const double pq = channel_power_quadrature(cl);
            c.rows.push_back({d, d / dF, field_branch(cl) == FieldBranch::far ? 1.0 : 0.0, edof_continuous(cl).edof,
                              pq * pq / kernel_power_quadrature(cl),
                              edof_numeric(build_channel(detail::continuous_proxy(cfg, d))).edof});
        }
        r.curves.push_back(std::move(c));
        return r;
    }

    inline PresetResult compute_preset(Preset preset, const SystemConfig &cfg, const RunOptions &opt)
    {
        switch (preset)
        {
        case Preset::edof_sweep:
            return run_edof_sweep(cfg);
        case Preset::capacity_sweep:
            return run_capacity_sweep(cfg, opt);
        case Preset::ergodic_power:
            return run_ergodic_power(cfg, opt);
        case Preset::ergodic_beta:
            return run_ergodic_beta(cfg, opt);
        case Preset::singular_spectrum:
            return run_singular_spectrum(cfg, opt);
        case Preset::field_boundary:
            return run_field_boundary(cfg);
        }
        throw config_error("unknown-preset", "unknown experiment preset");
    }

    inline std::string utc_timestamp()
    {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    inline nlohmann::json to_json(const RunManifest &m)
    {
        nlohmann::json j;
        j["preset"] = preset_name(m.preset);
        j["code_version"] = m.code_version;
        j["timestamp"] = m.timestamp;
        j["seed"] = m.options.seed;
        j["config"] = m.config.values;
        j["options"] = {{"mc_samples", m.options.mc_samples},
                        {"quad_m", m.options.quad_m},
                        {"strict_printed_form", m.options.strict_printed_form},
                        {"sweep_points", m.options.sweep_points}};
        auto pairs = nlohmann::json::array();
        for (const auto &[n, d] : m.options.spectrum_pairs)
            pairs.push_back({{"n", n}, {"d_m", d}});
        j["options"]["spectrum_pairs"] = pairs;
        auto outs = nlohmann::json::array();
        for (const auto &o : m.outputs)
            outs.push_back({{"file", o.file}, {"columns", o.columns}, {"provenance", o.provenance}});
        j["outputs"] = outs;
        j["summary"] = m.summary;
        j["warnings"] = m.warnings;
        j["notes"] = m.notes;
        return j;
    }

    inline RunManifest manifest_from_json(const nlohmann::json &j)
    {
        try
        {
            RunManifest m;
            m.preset = parse_preset(j.at("preset").get<std::string>());
            m.code_version = j.at("code_version").get<std::string>();
            m.timestamp = j.value("timestamp", "");
            m.config.values = j.at("config").get<std::map<std::string, double>>();
            const auto &o = j.at("options");
            m.options.seed = j.at("seed").get<std::uint64_t>();
            m.options.mc_samples = o.at("mc_samples").get<std::size_t>();
            m.options.quad_m = o.at("quad_m").get<std::size_t>();
            m.options.strict_printed_form = o.at("strict_printed_form").get<bool>();
            m.options.sweep_points = o.at("sweep_points").get<std::size_t>();
            m.options.spectrum_pairs.clear();
            for (const auto &p : o.at("spectrum_pairs"))
                m.options.spectrum_pairs.emplace_back(p.at("n").get<int>(), p.at("d_m").get<double>());
            return m;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw config_error("invalid-manifest", std::string("manifest is malformed: ") + e.what());
        }
    }

    inline void write_text(const std::filesystem::path &path, const std::string &text)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text))
            throw io_error("cannot write '" + path.string() + "'");
    }

    // Runs a preset, writes one CSV per curve family plus manifest.json into out_dir
    inline RunManifest run_experiment(Preset preset, const ConfigDocument &doc, const RunOptions &opt,
                                      const std::filesystem::path &out_dir)
    {
        const auto cfg = to_system_config(doc);
        if (opt.quad_m < 1 || opt.mc_samples < 1 || opt.sweep_points < 2)
            throw config_error("invalid-option", "quad-m and mc-samples must be at least 1, points at least 2");

        auto result = compute_preset(preset, cfg, opt);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec)
            throw io_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

        RunManifest m;
        m.preset = preset;
        m.config = doc;
        m.options = opt;
        m.timestamp = utc_timestamp();
        m.summary = std::move(result.summary);
        m.warnings = std::move(result.warnings);
        m.notes = std::move(result.notes);
        for (const auto &c : result.curves)
        {
            const std::string file = c.name + ".csv";
            emit_csv(c, out_dir / file);
            m.outputs.push_back({file, c.columns, c.provenance});
        }
        write_text(out_dir / "manifest.json", to_json(m).dump(2) + "\n");
        return m;
    }

    inline RunManifest load_manifest(const std::filesystem::path &path)
    {
        const auto text = read_text_file(path);
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw config_error("invalid-manifest", std::string("manifest is not valid JSON: ") + e.what());
        }
        return manifest_from_json(j);
    }

    // Re-runs a manifest; CSV outputs are byte-identical to the original run for the same build
    inline RunManifest replay(const std::filesystem::path &manifest_path, const std::filesystem::path &out_dir)
    {
        const auto m = load_manifest(manifest_path);
        return run_experiment(m.preset, m.config, m.options, out_dir);
    }
}

#endif
