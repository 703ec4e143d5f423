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

#ifndef NFMIMO_LINALG_HPP
#define NFMIMO_LINALG_HPP

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nfmimo
{
    using cplx = std::complex<double>;

    // Dense row-major complex matrix, immutable once constructed
    class ComplexMatrix
    {
    public:
        ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
            : rows_(rows), cols_(cols), data_(std::move(entries))
        {
            if (rows_ == 0 || cols_ == 0)
                throw domain_error("ComplexMatrix: dimensions must be positive");
            if (data_.size() != rows_ * cols_)
                throw domain_error("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                   " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
            for (const auto &v : data_)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw numeric_error("ComplexMatrix: non-finite entry");
        }

        // Fill entry (r, c) with f(r, c)
        template <typename F>
        static ComplexMatrix generate(std::size_t rows, std::size_t cols, F &&f)
        {
            std::vector<cplx> data(rows * cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    data[r * cols + c] = f(r, c);
            return ComplexMatrix(rows, cols, std::move(data));
        }

        static ComplexMatrix identity(std::size_t n)
        {
            return generate(n, n, [](std::size_t r, std::size_t c)
                            { return r == c ? cplx(1.0) : cplx(0.0); });
        }

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
        std::span<const cplx> entries() const noexcept { return data_; }
        std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

        ComplexMatrix adjoint() const
        {
            return generate(cols_, rows_, [this](std::size_t r, std::size_t c)
                            { return std::conj((*this)(c, r)); });
        }

        ComplexMatrix scaled(cplx a) const
        {
            auto d = data_;
            for (auto &v : d)
                v *= a;
            return ComplexMatrix(rows_, cols_, std::move(d));
        }

        // Sum of squared entry magnitudes
        double frobenius_norm_sq() const
        {
            double s = 0.0;
            for (const auto &v : data_)
                s += std::norm(v);
            return s;
        }

    private:
        std::size_t rows_, cols_;
        std::vector<cplx> data_;
    };

    namespace detail
    {
        // Hermitian product of rows a and b: sum_k a_k conj(b_k)
        inline cplx row_dot(std::span<const cplx> a, std::span<const cplx> b)
        {
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k)
            {
                const double ar = a[k].real(), ai = a[k].imag(), br = b[k].real(), bi = b[k].imag();
                re += ar * br + ai * bi;
                im += ai * br - ar * bi;
            }
            return {re, im};
        }

        inline ComplexMatrix hermitian_from_upper(std::size_t n, std::vector<cplx> &&m)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                m[i * n + i] = cplx(m[i * n + i].real(), 0.0);
                for (std::size_t j = i + 1; j < n; ++j)
                    m[j * n + i] = std::conj(m[i * n + j]);
            }
            return ComplexMatrix(n, n, std::move(m));
        }
    }

    // H* H (cols x cols), Hermitian by construction
    inline ComplexMatrix gram(const ComplexMatrix &H)
    {
        const std::size_t n = H.cols();
        std::vector<cplx> m(n * n, cplx(0.0));
        for (std::size_t k = 0; k < H.rows(); ++k)
        {
            const auto h = H.row(k);
            for (std::size_t i = 0; i < n; ++i)
            {
                const cplx hi = std::conj(h[i]);
                for (std::size_t j = i; j < n; ++j)
                    m[i * n + j] += hi * h[j];
            }
        }
        return detail::hermitian_from_upper(n, std::move(m));
    }

    // H H* (rows x rows), Hermitian by construction
    inline ComplexMatrix row_gram(const ComplexMatrix &H)
    {
        const std::size_t n = H.rows();
        std::vector<cplx> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                m[i * n + j] = detail::row_dot(H.row(i), H.row(j));
        return detail::hermitian_from_upper(n, std::move(m));
    }

    inline cplx trace(const ComplexMatrix &A)
    {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
            t += A(i, i);
        return t;
    }

    // Eigenvalues of a Hermitian matrix, sorted descending.
    //
    // Cyclic Jacobi with complex rotations: each (p,q) pivot is made real by a diagonal phase
    // change and then annihilated by a real plane rotation. Iteration stops once every
    // off-diagonal magnitude is below 1e-13 * max(|tr A|, ||A||_F). Only eigenvalues are
    // tracked, so the accumulated unitary is never formed.
    inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix &R)
    {
        if (R.rows() != R.cols())
            throw domain_error("hermitian_eigenvalues: matrix is not square");
        const std::size_t n = R.rows();

        double max_abs = 0.0, asym = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
            {
                max_abs = std::max(max_abs, std::abs(R(i, j)));
                asym = std::max(asym, std::abs(R(i, j) - std::conj(R(j, i))));
            }
        if (asym > 1e-12 * max_abs)
            throw domain_error("hermitian_eigenvalues: matrix is not Hermitian (relative asymmetry " +
                               std::to_string(max_abs > 0.0 ? asym / max_abs : asym) + ")");

        std::vector<cplx> a(R.entries().begin(), R.entries().end());
        auto at = [&](std::size_t i, std::size_t j) -> cplx & { return a[i * n + j]; };
        for (std::size_t i = 0; i < n; ++i)
            at(i, i) = cplx(at(i, i).real(), 0.0);

        const double tol = 1e-13 * std::max(std::abs(trace(R)), std::sqrt(R.frobenius_norm_sq()));
        constexpr int max_sweeps = 60;

        auto max_offdiag = [&]
        {
            double m = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    m = std::max(m, std::abs(at(i, j)));
            return m;
        };

        int sweep = 0;
        while (max_offdiag() > tol)
        {
            if (++sweep > max_sweeps)
                throw numeric_error("hermitian_eigenvalues: Jacobi iteration did not converge in " +
                                    std::to_string(max_sweeps) + " sweeps");
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q)
                {
                    const cplx apq = at(p, q);
                    const double mag = std::abs(apq);
                    if (mag == 0.0 || mag < 1e-3 * tol)
                        continue;

                    const cplx phase_conj = std::conj(apq) / mag; // e^{-i theta}
                    const double app = at(p, p).real(), aqq = at(q, q).real();
                    const double theta = (aqq - app) / (2.0 * mag);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;

                    for (std::size_t r = 0; r < n; ++r)
                    {
                        if (r == p || r == q)
                            continue;
                        const cplx arp = at(r, p);
                        const cplx arq = at(r, q) * phase_conj;
                        const cplx nrp = c * arp - s * arq;
                        const cplx nrq = s * arp + c * arq;
                        at(r, p) = nrp;
                        at(p, r) = std::conj(nrp);
                        at(r, q) = nrq;
                        at(q, r) = std::conj(nrq);
                    }
                    at(p, p) = app - t * mag;
                    at(q, q) = aqq + t * mag;
                    at(p, q) = 0.0;
                    at(q, p) = 0.0;
                }
        }

        std::vector<double> ev(n);
        for (std::size_t i = 0; i < n; ++i)
            ev[i] = at(i, i).real();
        std::sort(ev.begin(), ev.end(), std::greater<>());

        const double scale = ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back()));
        for (auto &v : ev)
            if (v < 0.0 && v >= -1e-12 * scale)
                v = 0.0;
        return ev;
    }

    inline constexpr double rank_tolerance = 1e-12;

    struct SingularSpectrum
    {
        std::vector<double> values; // Descending, nonnegative
        std::size_t numerical_rank = 0;
    };

    inline SingularSpectrum make_spectrum(std::vector<double> values)
    {
        std::sort(values.begin(), values.end(), std::greater<>());
        SingularSpectrum s{std::move(values), 0};
        if (!s.values.empty() && s.values.front() > 0.0)
            s.numerical_rank = static_cast<std::size_t>(std::count_if(
                s.values.begin(), s.values.end(), [&](double v)
                { return v > rank_tolerance * s.values.front(); }));
        return s;
    }

    // Singular values from the eigenvalues of the smaller Gram matrix. Eigenvalues below
    // n eps lambda_max are rounding noise of the Gram product (they would surface as
    // singular values near sqrt(eps) s_1) and are reported as exact zeros.
    inline SingularSpectrum singular_values(const ComplexMatrix &H)
    {
        const auto ev = H.rows() <= H.cols() ? hermitian_eigenvalues(row_gram(H))
                                             : hermitian_eigenvalues(gram(H));
        const double floor = static_cast<double>(ev.size()) * std::numeric_limits<double>::epsilon() *
                             (ev.empty() ? 0.0 : ev.front());
        std::vector<double> s(ev.size());
        std::transform(ev.begin(), ev.end(), s.begin(), [&](double v)
                       { return v > floor ? std::sqrt(v) : 0.0; });
        return make_spectrum(std::move(s));
    }

    struct WaterFillResult
    {
        std::vector<double> per_channel_power; // [W], aligned with the spectrum values
        double capacity = 0.0;                 // [bit/s/Hz]
        double water_level = 0.0;              // [W]
        std::size_t active_channels = 0;
    };

    // Optimal power split over the nonzero singular values (capacity-achieving water-filling).
    // Channels are deactivated from the weakest end while their allocation would be negative;
    // equal gains therefore always share the same fate.
    inline WaterFillResult water_fill(const SingularSpectrum &spectrum, double P, double N0)
    {
        if (!(P > 0.0) || !(N0 > 0.0))
            throw domain_error("water_fill: powers must be positive");
        const std::size_t rank = spectrum.numerical_rank;
        if (rank == 0)
            throw domain_error("water_fill: spectrum has zero numerical rank");

        std::vector<double> inv_gain(rank); // N0 / s_i^2
        for (std::size_t i = 0; i < rank; ++i)
            inv_gain[i] = N0 / (spectrum.values[i] * spectrum.values[i]);

        std::vector<double> prefix(rank + 1, 0.0);
        for (std::size_t i = 0; i < rank; ++i)
            prefix[i + 1] = prefix[i] + inv_gain[i];

        std::size_t k = rank;
        double mu = 0.0;
        for (; k >= 1; --k)
        {
            mu = (P + prefix[k]) / static_cast<double>(k);
            if (mu - inv_gain[k - 1] >= 0.0)
                break;
        }

        WaterFillResult out;
        out.per_channel_power.assign(spectrum.values.size(), 0.0);
        out.water_level = mu;
        out.active_channels = k;
        for (std::size_t i = 0; i < k; ++i)
        {
            const double p = mu - inv_gain[i];
            out.per_channel_power[i] = p;
            out.capacity += std::log1p(p / inv_gain[i]);
        }
        out.capacity /= std::numbers::ln2;
        return out;
    }
}

#endif
