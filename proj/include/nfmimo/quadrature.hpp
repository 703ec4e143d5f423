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

#ifndef NFMIMO_QUADRATURE_HPP
#define NFMIMO_QUADRATURE_HPP

#include "error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace nfmimo
{
    // Chebyshev-Gauss rule of the first kind on [-1, 1]
    struct QuadratureSpec
    {
        std::size_t node_count = 0;  // M
        std::vector<double> nodes;   // theta_i = cos((2i-1) pi / (2M))
        std::vector<double> weights; // omega_i = pi / M
    };

    inline QuadratureSpec chebyshev_gauss_rule(std::size_t M)
    {
        if (M < 1)
            throw domain_error("chebyshev_gauss_rule: node count must be at least 1");
        QuadratureSpec q{M, std::vector<double>(M), std::vector<double>(M, std::numbers::pi / static_cast<double>(M))};
        for (std::size_t i = 1; i <= M; ++i)
            q.nodes[i - 1] = std::cos(static_cast<double>(2 * i - 1) * std::numbers::pi / (2.0 * static_cast<double>(M)));
        return q;
    }

    // Integral of f over [a, b] using the Chebyshev-Gauss nodes with the sqrt(1 - theta^2)
    // factor restoring an unweighted integrand. Nodes map through the interval midpoint.
    template <typename F>
    double chebyshev_gauss(F &&f, double a, double b, std::size_t M)
    {
        if (!(a < b))
            throw domain_error("chebyshev_gauss: requires a < b");
        const auto rule = chebyshev_gauss_rule(M);
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < M; ++i)
        {
            const double theta = rule.nodes[i];
            const double x = half * theta + mid;
            const double fx = f(x);
            if (!std::isfinite(fx))
                throw numeric_error("chebyshev_gauss: non-finite integrand at node " + std::to_string(i + 1) +
                                    " (x = " + std::to_string(x) + ")");
            sum += rule.weights[i] * std::sqrt(1.0 - theta * theta) * fx;
        }
        return half * sum;
    }

    namespace quad
    {
        using rule16 = boost::math::quadrature::gauss<double, 16>;

        inline constexpr std::size_t initial_panels = 4; // 64 nodes per axis
        inline constexpr int max_doublings = 12;
        inline constexpr double rel_tol = 1e-8;

        // Fixed composite 16-point Gauss-Legendre over [a, b]
        template <typename F>
        double composite_gl(F &&f, double a, double b, std::size_t panels)
        {
            static const auto &abscissa = rule16::abscissa();
            static const auto &weights = rule16::weights();
            const double h = (b - a) / static_cast<double>(panels);
            double total = 0.0;
            for (std::size_t p = 0; p < panels; ++p)
            {
                const double mid = a + (static_cast<double>(p) + 0.5) * h, half = 0.5 * h;
                double s = 0.0;
                // Boost stores the nonnegative half of a symmetric rule; 16 is even, so no zero node
                for (std::size_t k = 0; k < abscissa.size(); ++k)
                    s += weights[k] * (f(mid + half * abscissa[k]) + f(mid - half * abscissa[k]));
                total += half * s;
            }
            return total;
        }

        // Doubles the panel count until two successive estimates agree to rel_tol
        template <typename Estimate>
        double converge(Estimate &&estimate, const char *what)
        {
            std::size_t panels = initial_panels;
            double prev = estimate(panels);
            for (int i = 0; i < max_doublings; ++i)
            {
                panels *= 2;
                const double next = estimate(panels);
                if (!std::isfinite(next))
                    throw numeric_error(std::string(what) + ": non-finite quadrature estimate");
                if (std::abs(next - prev) <= rel_tol * std::abs(next))
                    return next;
                prev = next;
            }
            throw numeric_error(std::string(what) + ": quadrature did not converge after " +
                                std::to_string(max_doublings) + " doublings");
        }

        template <typename F>
        double integrate(F &&f, double a, double b, const char *what = "integrate")
        {
            return converge([&](std::size_t n)
                            { return composite_gl(f, a, b, n); },
                            what);
        }

        // Integral over { (x, y) : x in [x_k, x_{k+1}], y_lo(x) <= y <= y_hi(x) } summed over
        // the outer breakpoints. Breakpoints must include every kink of y_lo and y_hi.
        template <typename F, typename Lo, typename Hi>
        double integrate_2d(F &&f, const std::vector<double> &x_breaks, Lo &&y_lo, Hi &&y_hi,
                            const char *what = "integrate_2d")
        {
            return converge([&](std::size_t n)
                            {
                                double total = 0.0;
                                for (std::size_t k = 0; k + 1 < x_breaks.size(); ++k)
                                {
                                    if (!(x_breaks[k] < x_breaks[k + 1]))
                                        continue;
                                    total += composite_gl([&](double x)
                                                          {
                                                              const double lo = y_lo(x), hi = y_hi(x);
                                                              if (!(lo < hi))
                                                                  return 0.0;
                                                              return composite_gl([&](double y)
                                                                                  { return f(x, y); },
                                                                                  lo, hi, n);
                                                          },
                                                          x_breaks[k], x_breaks[k + 1], n);
                                }
                                return total; },
                            what);
        }
    }
}

#endif
