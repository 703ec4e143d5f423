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

#ifndef NFMIMO_CSV_HPP
#define NFMIMO_CSV_HPP

#include "error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace nfmimo
{
    // Tabulated samples of one curve family: the x variable first, then one column per
    // method. Column names carry their unit suffix (e.g. "d_m", "capacity_bps_hz").
    struct CapacityCurve
    {
        std::string name;
        std::vector<std::string> columns;
        std::vector<std::vector<double>> rows;
        std::map<std::string, std::string> provenance; // column -> formula or oracle that produced it
    };

    inline std::string format_number(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    inline std::string format_csv(const CapacityCurve &curve)
    {
        if (curve.rows.empty())
            throw domain_error("emit_csv: curve '" + curve.name + "' has no samples");
        std::string out;
        for (std::size_t c = 0; c < curve.columns.size(); ++c)
            out += (c ? "," : "") + curve.columns[c];
        out += '\n';
        for (std::size_t r = 0; r < curve.rows.size(); ++r)
        {
            const auto &row = curve.rows[r];
            if (row.size() != curve.columns.size())
                throw domain_error("emit_csv: row width does not match header in '" + curve.name + "'");
            for (std::size_t c = 0; c < row.size(); ++c)
            {
                if (!std::isfinite(row[c]))
                    throw numeric_error("emit_csv: non-finite value in '" + curve.name + "', column '" +
                                        curve.columns[c] + "', row " + std::to_string(r + 1));
                out += (c ? "," : "") + format_number(row[c]);
            }
            out += '\n';
        }
        return out;
    }

    // Writes header + one row per sample, 12 significant digits, LF line endings
    inline void emit_csv(const CapacityCurve &curve, const std::filesystem::path &path)
    {
        const auto text = format_csv(curve);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot open '" + path.string() + "' for writing");
        out << text;
        if (!out)
            throw io_error("failed writing '" + path.string() + "'");
    }

    inline CapacityCurve parse_csv(const std::string &text, std::string name = {})
    {
        CapacityCurve curve;
        curve.name = std::move(name);
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line))
            throw domain_error("parse_csv: empty input");
        for (std::stringstream hs(line); std::getline(hs, line, ',');)
            curve.columns.push_back(line);
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            std::vector<double> row;
            std::stringstream rs(line);
            for (std::string cell; std::getline(rs, cell, ',');)
            {
                std::size_t used = 0;
                double v = 0.0;
                try
                {
                    v = std::stod(cell, &used);
                }
                catch (const std::logic_error &)
                {
                }
                if (used == 0 || used != cell.size())
                    throw domain_error("parse_csv: cell '" + cell + "' is not a number");
                row.push_back(v);
            }
            if (row.size() != curve.columns.size())
                throw domain_error("parse_csv: ragged row");
            curve.rows.push_back(std::move(row));
        }
        return curve;
    }
}

#endif
