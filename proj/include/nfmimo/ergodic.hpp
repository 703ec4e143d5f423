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

#ifndef NFMIMO_ERGODIC_HPP
#define NFMIMO_ERGODIC_HPP

#include "error.hpp"
#include "physics.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace nfmimo
{
    inline void validate_ring(const DeploymentRing &ring)
    {
        if (!(ring.inner_radius > 0.0) || !(ring.inner_radius < ring.outer_radius))
            throw config_error("degenerate-ring", "degenerate ring: need 0 < d1 < d2");
    }

    // Receiver distance density 2d / (d2^2 - d1^2) on [d1, d2]
    inline double distance_pdf(double d, const DeploymentRing &ring)
    {
        validate_ring(ring);
        if (d < ring.inner_radius || d > ring.outer_radius)
            return 0.0;
        return 2.0 * d / ring.area_factor();
    }

    // Inverse CDF: d = sqrt(d1^2 + u (d2^2 - d1^2)) for u in [0, 1)
    inline double sample_distance_from_uniform(const DeploymentRing &ring, double u)
    {
        return std::sqrt(ring.inner_radius * ring.inner_radius + u * ring.area_factor());
    }

    // Uniform double on [0, 1) from the top 53 bits, identical on every standard library
    inline double uniform53(std::mt19937_64 &g)
    {
        return static_cast<double>(g() >> 11) * 0x1.0p-53;
    }

    inline double sample_distance(const DeploymentRing &ring, std::mt19937_64 &rng)
    {
        return sample_distance_from_uniform(ring, uniform53(rng));
    }

    enum class ErgodicMethod
    {
        quadrature,
        monte_carlo
    };

    struct ErgodicSegment
    {
        double lower = 0.0, upper = 0.0;
        std::size_t node_count = 0;
    };

    struct ErgodicResult
    {
        double capacity = 0.0; // [bit/s/Hz]
        ErgodicMethod method = ErgodicMethod::quadrature;
        std::vector<ErgodicSegment> segments;
        std::optional<std::uint64_t> seed;
        std::optional<double> standard_error;
        std::size_t samples = 0;
    };

    // E[C(d)] = int f_D(x) C(x) dx by Chebyshev-Gauss quadrature with M nodes per segment.
    // With split_at (the field boundary) the ring is cut into [d1, min(d2, d_F)] and
    // [max(d1, d_F), d2]; empty segments are skipped.
    template <typename F>
    ErgodicResult ergodic_capacity(F &&conditional_capacity, const DeploymentRing &ring, std::size_t M,
                                   std::optional<double> split_at = std::nullopt)
    {
        validate_ring(ring);
        const double d1 = ring.inner_radius, d2 = ring.outer_radius, area = ring.area_factor();

        std::vector<ErgodicSegment> segments;
        if (split_at)
        {
            const double near_hi = std::min(d2, *split_at), far_lo = std::max(d1, *split_at);
            if (near_hi - d1 > 0.0)
                segments.push_back({d1, near_hi, M});
            if (d2 - far_lo > 0.0)
                segments.push_back({far_lo, d2, M});
        }
        else
            segments.push_back({d1, d2, M});

        ErgodicResult out;
        out.method = ErgodicMethod::quadrature;
        for (const auto &s : segments)
            out.capacity += chebyshev_gauss([&](double x)
                                            { return 2.0 * x / area * conditional_capacity(x); },
                                            s.lower, s.upper, s.node_count);
        out.segments = std::move(segments);
        return out;
    }

    namespace detail
    {
        inline constexpr std::size_t mc_batch = 1u << 16;

        inline std::mt19937_64 batch_generator(std::uint64_t seed, std::uint64_t batch)
        {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
            return std::mt19937_64(seq);
        }
    }

    // Monte-Carlo mean of C(d) over ring-uniform receivers. Samples are split into fixed-size
    // batches, each with its own generator seeded from (seed, batch index); batch sums are
    // reduced in index order, so the result does not depend on the thread count.
    template <typename F>
    ErgodicResult ergodic_capacity_mc(F &&conditional_capacity, const DeploymentRing &ring, std::size_t samples,
                                      std::uint64_t seed, unsigned threads = 0)
    {
        validate_ring(ring);
        if (samples < 1)
            throw domain_error("ergodic_capacity_mc: need at least one sample");

        const std::size_t batches = (samples + detail::mc_batch - 1) / detail::mc_batch;

        // Deviations from a fixed reference keep the accumulation well conditioned and make a
        // constant capacity come back exactly
        const double reference = [&]
        {
            auto g = detail::batch_generator(seed, 0);
            return conditional_capacity(sample_distance(ring, g));
        }();
        if (!std::isfinite(reference))
            throw numeric_error("ergodic_capacity_mc: non-finite conditional capacity");

        std::vector<double> sums(batches, 0.0), sq_sums(batches, 0.0);
        std::vector<std::exception_ptr> failures(batches);

        auto run_batch = [&](std::size_t b)
        {
            try
            {
                auto rng = detail::batch_generator(seed, b);
                const std::size_t n = std::min(detail::mc_batch, samples - b * detail::mc_batch);
                double s = 0.0, s2 = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                {
                    const double c = conditional_capacity(sample_distance(ring, rng)) - reference;
                    if (!std::isfinite(c))
                        throw numeric_error("ergodic_capacity_mc: non-finite conditional capacity");
                    s += c;
                    s2 += c * c;
                }
                sums[b] = s;
                sq_sums[b] = s2;
            }
            catch (...)
            {
                failures[b] = std::current_exception();
            }
        };

        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, batches));
        if (threads <= 1)
            for (std::size_t b = 0; b < batches; ++b)
                run_batch(b);
        else
        {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&]
                                  {
                                      for (std::size_t b; (b = next.fetch_add(1)) < batches;)
                                          run_batch(b); });
        }
        for (const auto &f : failures)
            if (f)
                std::rethrow_exception(f);

        double s = 0.0, s2 = 0.0;
        for (std::size_t b = 0; b < batches; ++b)
        {
            s += sums[b];
            s2 += sq_sums[b];
        }
        const double n = static_cast<double>(samples);
        const double shift = s / n;
        const double var = samples > 1 ? std::max(0.0, (s2 - n * shift * shift) / (n - 1.0)) : 0.0;

        ErgodicResult out;
        out.capacity = reference + shift;
        out.method = ErgodicMethod::monte_carlo;
        out.segments = {{ring.inner_radius, ring.outer_radius, 0}};
        out.seed = seed;
        out.standard_error = std::sqrt(var / n);
        out.samples = samples;
        return out;
    }
}

#endif
