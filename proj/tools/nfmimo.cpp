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

// Command-line front end: nfmimo <preset> --config <path> [options], nfmimo replay --manifest <path>
// Exit codes: 0 success, 2 configuration error, 3 numeric error, 4 I/O error

#include "nfmimo/experiments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace
{
    using nlohmann::json;

    int report(const std::string &kind, int code, const std::vector<nfmimo::Issue> &issues)
    {
        json j{{"status", "error"}, {"kind", kind}, {"exit_code", code}, {"issues", json::array()}};
        for (const auto &i : issues)
            j["issues"].push_back({{"code", i.code}, {"message", i.message}});
        std::cerr << j.dump() << std::endl;
        return code;
    }

    // "N:d,N:d" with d in meters
    std::vector<std::pair<int, double>> parse_pairs(const std::string &text)
    {
        std::vector<std::pair<int, double>> pairs;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw nfmimo::config_error("invalid-pair", "pair '" + item + "' is not of the form N:d");
            try
            {
                std::size_t used_n = 0, used_d = 0;
                const int n = std::stoi(item.substr(0, colon), &used_n);
                const double d = std::stod(item.substr(colon + 1), &used_d);
                if (used_n != colon || used_d != item.size() - colon - 1)
                    throw std::invalid_argument(item);
                pairs.emplace_back(n, d);
            }
            catch (const std::logic_error &)
            {
                throw nfmimo::config_error("invalid-pair", "pair '" + item + "' is not of the form N:d");
            }
        }
        if (pairs.empty())
            throw nfmimo::config_error("invalid-pair", "--pairs is empty");
        return pairs;
    }

    void print_result(const nfmimo::experiments::RunManifest &m, const std::string &out_dir)
    {
        json j{{"status", "ok"}, {"preset", nfmimo::experiments::preset_name(m.preset)}, {"out", out_dir}};
        j["files"] = json::array();
        for (const auto &o : m.outputs)
            j["files"].push_back(o.file);
        j["files"].push_back("manifest.json");
        if (!m.summary.empty())
            j["summary"] = m.summary;
        for (const auto &w : m.warnings)
            std::cerr << "warning: " << w << "\n";
        std::cout << j.dump(2) << std::endl;
    }
}

int main(int argc, char **argv)
{
    namespace ex = nfmimo::experiments;

    CLI::App app{"nfmimo: near-field line-of-sight MIMO performance analysis"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", pairs_text, manifest_path;
    ex::RunOptions opt;

    for (const auto &[preset, name] : ex::preset_names())
    {
        auto *sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", config_path, "configuration file (key = value)")->required();
        sub->add_option("--out", out_dir, "output directory")->capture_default_str();
        sub->add_option("--seed", opt.seed, "Monte-Carlo seed")->capture_default_str();
        sub->add_option("--mc-samples", opt.mc_samples, "Monte-Carlo sample count")->capture_default_str();
        sub->add_option("--quad-m", opt.quad_m, "Chebyshev-Gauss node count")->capture_default_str();
        sub->add_flag("--strict-paper-theorem1", opt.strict_printed_form,
                      "drop the l_e^2 factor from the discrete closed-form capacity");
        sub->add_option("--points", opt.sweep_points, "capacity-sweep grid size")->capture_default_str();
        sub->add_option("--pairs", pairs_text, "singular-spectrum pairs, e.g. 100:5,200:15");
    }
    auto *replay = app.add_subcommand("replay", "re-run an experiment from its manifest");
    replay->add_option("--manifest", manifest_path, "manifest.json of an earlier run")->required();
    replay->add_option("--out", out_dir, "output directory")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return report("config", 2, {{"usage", e.what()}});
    }

    try
    {
        ex::RunManifest m;
        if (replay->parsed())
            m = ex::replay(manifest_path, out_dir);
        else
        {
            const auto preset = ex::parse_preset(app.get_subcommands().front()->get_name());
            if (!pairs_text.empty())
                opt.spectrum_pairs = parse_pairs(pairs_text);
            m = ex::run_experiment(preset, nfmimo::load_config_document(config_path), opt, out_dir);
        }
        print_result(m, out_dir);
        return 0;
    }
    catch (const nfmimo::config_error &e)
    {
        return report("config", 2, e.issues());
    }
    catch (const nfmimo::io_error &e)
    {
        return report("io", 4, {{"io", e.what()}});
    }
    catch (const nfmimo::numeric_error &e)
    {
        return report("numeric", 3, {{"numeric", e.what()}});
    }
    catch (const nfmimo::domain_error &e)
    {
        return report("config", 2, {{"domain", e.what()}});
    }
    catch (const std::exception &e)
    {
        return report("numeric", 3, {{"internal", e.what()}});
    }
}
