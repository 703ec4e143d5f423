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

#ifndef NFMIMO_ERROR_HPP
#define NFMIMO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nfmimo
{
    // A single named, machine-readable problem found while validating inputs
    struct Issue
    {
        std::string code;    // e.g. "element-length-exceeds-spacing"
        std::string message; // Human readable explanation
        bool operator==(const Issue &) const = default;
    };

    // Invalid configuration or precondition violation at the configuration boundary
    class config_error : public std::invalid_argument
    {
    public:
        explicit config_error(std::vector<Issue> issues)
            : std::invalid_argument(join(issues)), issues_(std::move(issues)) {}

        config_error(std::string code, const std::string &message)
            : config_error(std::vector<Issue>{{std::move(code), message}}) {}

        const std::vector<Issue> &issues() const noexcept { return issues_; }

    private:
        static std::string join(const std::vector<Issue> &issues)
        {
            std::string out;
            for (const auto &i : issues)
            {
                if (!out.empty())
                    out += "; ";
                out += i.code + ": " + i.message;
            }
            return out;
        }

        std::vector<Issue> issues_;
    };

    // Mathematical domain violation (non-Hermitian input, zero channel, ...)
    class domain_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Non-convergence or a non-finite intermediate result
    class numeric_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
