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

#include "../support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace nfmimo;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace
{
    // Random positive semidefinite A = B* B with B of size k x n
    ComplexMatrix random_psd(std::size_t n, std::size_t k, std::mt19937_64 &g)
    {
        return gram(test::random_matrix(k, n, g));
    }
}

TEST_CASE("Linalg - Matrix construction")
{
    CHECK_THROWS_AS(ComplexMatrix(0, 2, {}), nfmimo::domain_error);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), nfmimo::domain_error);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(std::nan(""), 0.0)}), numeric_error);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(0.0, INFINITY)}), numeric_error);

    const ComplexMatrix A(2, 3, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}});
    CHECK(A(1, 2) == cplx(11, 12));
    const auto Ah = A.adjoint();
    CHECK(Ah.rows() == 3);
    CHECK(Ah(2, 1) == cplx(11, -12));
    CHECK(A.frobenius_norm_sq() == 650.0);
    CHECK(A.scaled(cplx(0, 1))(0, 0) == cplx(-2, 1));
}

TEST_CASE("Linalg - Gram matrices")
{
    SECTION("Scalar")
    {
        const ComplexMatrix H(1, 1, {cplx(3, -4)});
        CHECK(gram(H)(0, 0) == cplx(25.0, 0.0));
    }
    SECTION("Identity")
    {
        const auto R = gram(ComplexMatrix::identity(2));
        CHECK(R(0, 0) == cplx(1.0));
        CHECK(R(1, 1) == cplx(1.0));
        CHECK(R(0, 1) == cplx(0.0));
    }
    SECTION("Random 3x2 against a triple loop")
    {
        std::mt19937_64 g(7);
        const auto H = test::random_matrix(3, 2, g);
        const auto R = gram(H);
        const auto ref = test::gram_triple_loop(H);
        REQUIRE(R.rows() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(std::abs(R(i, j) - ref[i * 2 + j]) <= 1e-14 * std::abs(ref[i * 2 + i]));
    }
    SECTION("Exactly Hermitian and trace equals channel power")
    {
        std::mt19937_64 g(11);
        for (std::size_t r : {1u, 5u, 17u})
            for (std::size_t c : {1u, 3u, 24u})
            {
                const auto H = test::random_matrix(r, c, g);
                for (const auto &R : {gram(H), row_gram(H)})
                {
                    for (std::size_t i = 0; i < R.rows(); ++i)
                    {
                        CHECK(R(i, i).imag() == 0.0);
                        for (std::size_t j = 0; j < R.cols(); ++j)
                            CHECK(R(i, j) == std::conj(R(j, i)));
                    }
                    CHECK_THAT(trace(R).real(), WithinRel(H.frobenius_norm_sq(), 1e-12));
                }
            }
    }
}

TEST_CASE("Linalg - Hermitian eigenvalues, closed cases")
{
    SECTION("Diagonal")
    {
        const ComplexMatrix D(2, 2, {1.0, 0.0, 0.0, 3.0});
        const auto ev = hermitian_eigenvalues(D);
        CHECK(ev == std::vector<double>{3.0, 1.0});
    }
    SECTION("Rank one")
    {
        const std::vector<cplx> a{{1, 2}, {-0.5, 0.25}, {3, 0}, {0, -1}, {2, 2}};
        const auto R = ComplexMatrix::generate(5, 5, [&](std::size_t i, std::size_t j)
                                               { return a[i] * std::conj(a[j]); });
        double norm2 = 0;
        for (auto v : a)
            norm2 += std::norm(v);
        const auto ev = hermitian_eigenvalues(R);
        CHECK_THAT(ev[0], WithinRel(norm2, 1e-13));
        for (std::size_t i = 1; i < ev.size(); ++i)
            CHECK_THAT(ev[i], WithinAbs(0.0, 1e-13 * norm2));
    }
    SECTION("2x2 against the quadratic formula")
    {
        const ComplexMatrix A(2, 2, {2.0, cplx(1, 1), cplx(1, -1), -1.0});
        const double tr = 1.0, det = -2.0 - 2.0;
        const double disc = std::sqrt(tr * tr - 4 * det);
        const auto ev = hermitian_eigenvalues(A);
        CHECK_THAT(ev[0], WithinRel((tr + disc) / 2, 1e-14));
        CHECK_THAT(ev[1], WithinRel((tr - disc) / 2, 1e-14));
    }
    SECTION("Non-Hermitian input is rejected")
    {
        const ComplexMatrix A(2, 2, {1.0, cplx(0, 1), cplx(0, 1), 1.0});
        CHECK_THROWS_AS(hermitian_eigenvalues(A), nfmimo::domain_error);
        CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3, std::vector<cplx>(6))), nfmimo::domain_error);
    }
    SECTION("Zero matrix")
    {
        const auto ev = hermitian_eigenvalues(ComplexMatrix(3, 3, std::vector<cplx>(9)));
        CHECK(ev == std::vector<double>{0.0, 0.0, 0.0});
    }
}

TEST_CASE("Linalg - Hermitian eigenvalues against the characteristic polynomial")
{
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 20; ++trial)
    {
        // Indefinite Hermitian: A = (B + B*) / 2
        const auto B = test::random_matrix(4, 4, g);
        const auto A = ComplexMatrix::generate(4, 4, [&](std::size_t i, std::size_t j)
                                               { return 0.5 * (B(i, j) + std::conj(B(j, i))); });
        std::vector<cplx> a(A.entries().begin(), A.entries().end());
        const double bound = 1.0 + std::sqrt(A.frobenius_norm_sq());
        const auto roots = test::polynomial_roots(test::characteristic_polynomial(a, 4), bound);
        REQUIRE(roots.size() == 4);
        const auto ev = hermitian_eigenvalues(A);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(std::abs(ev[i] - roots[i]) <= 1e-10 * std::max(1.0, std::abs(roots[i])));
    }
}

TEST_CASE("Linalg - Eigenvalue trace identities up to 64x64")
{
    std::mt19937_64 g(99);
    for (std::size_t n : {2u, 7u, 16u, 33u, 64u})
        for (std::size_t k : {n / 2 + 1, n, 2 * n})
        {
            const auto A = random_psd(n, k, g);
            const auto ev = hermitian_eigenvalues(A);
            REQUIRE(ev.size() == n);
            CHECK(std::is_sorted(ev.rbegin(), ev.rend()));
            CHECK(ev.back() >= 0.0);

            const double sum = std::accumulate(ev.begin(), ev.end(), 0.0);
            double sum_sq = 0;
            for (double v : ev)
                sum_sq += v * v;
            CHECK_THAT(sum, WithinRel(trace(A).real(), 1e-10));
            CHECK_THAT(sum_sq, WithinRel(A.frobenius_norm_sq(), 1e-10)); // tr(A^2) for Hermitian A
        }
}

TEST_CASE("Linalg - Singular values")
{
    SECTION("Scalar")
    {
        const auto s = singular_values(ComplexMatrix(1, 1, {cplx(0.0, -2.5)}));
        CHECK(s.values == std::vector<double>{2.5});
        CHECK(s.numerical_rank == 1);
    }
    SECTION("Orthogonal equal-norm columns")
    {
        // 4x3 matrix with orthogonal columns of norm 2 (scaled Fourier columns)
        const auto H = ComplexMatrix::generate(4, 3, [](std::size_t r, std::size_t c)
                                               { return std::polar(1.0, 2.0 * pi * double(r * c) / 4.0); });
        const auto s = singular_values(H);
        REQUIRE(s.values.size() == 3);
        for (double v : s.values)
            CHECK_THAT(v, WithinRel(2.0, 1e-14));
        CHECK(s.numerical_rank == 3);
    }
    SECTION("Uses the smaller dimension and counts the rank")
    {
        std::mt19937_64 g(5);
        const auto u = test::random_matrix(6, 1, g), v = test::random_matrix(1, 9, g);
        const auto H = ComplexMatrix::generate(6, 9, [&](std::size_t r, std::size_t c)
                                               { return u(r, 0) * v(0, c); });
        const auto s = singular_values(H);
        CHECK(s.values.size() == 6);
        CHECK(s.numerical_rank == 1);
        CHECK_THAT(s.values[0] * s.values[0], WithinRel(H.frobenius_norm_sq(), 1e-12));
        CHECK(singular_values(H.adjoint()).values.size() == 6);
    }
    SECTION("Zero spectrum has rank zero")
    {
        CHECK(make_spectrum({0.0, 0.0}).numerical_rank == 0);
        CHECK(make_spectrum({}).numerical_rank == 0);
        const auto s = make_spectrum({1e-13, 1.0, 2e-12});
        CHECK(s.values.front() == 1.0);
        CHECK(s.numerical_rank == 2);
    }
    SECTION("N x N link: plateau then fall-off")
    {
        // 100 x 100 over a 100 lambda aperture at 15 m
        const double q = test::lambda28;
        const auto s = singular_values(build_channel(test::discrete_link(100, 100, q, q, 15.0))).values;
        const double plateau = s[0];
        int strong = 0;
        for (double v : s)
            strong += v > 0.5 * plateau;
        CHECK(strong >= 2);
        CHECK(s[strong + 5] < 1e-2 * plateau);
        CHECK(s[1] > 0.9 * plateau);
    }
}

TEST_CASE("Linalg - Water-filling")
{
    SECTION("Single channel")
    {
        const auto w = water_fill(make_spectrum({1.0}), 10.0, 1.0);
        CHECK_THAT(w.capacity, WithinRel(std::log2(11.0), 1e-15));
        CHECK_THAT(w.capacity, WithinRel(3.459, 1e-3));
        CHECK(w.active_channels == 1);
    }
    SECTION("Equal channels split evenly")
    {
        for (double P : {1e-6, 0.3, 10.0, 1e5})
        {
            const auto w = water_fill(make_spectrum({0.7, 0.7}), P, 0.1);
            CHECK(w.per_channel_power[0] == w.per_channel_power[1]);
            CHECK_THAT(w.per_channel_power[0], WithinRel(P / 2, 1e-9));
        }
    }
    SECTION("Two channels solved by hand")
    {
        // mu = (10 + 1 + 4) / 2 = 7.5 -> P1 = 6.5, P2 = 3.5
        const auto w = water_fill(make_spectrum({1.0, 0.5}), 10.0, 1.0);
        CHECK_THAT(w.per_channel_power[0], WithinRel(6.5, 1e-14));
        CHECK_THAT(w.per_channel_power[1], WithinRel(3.5, 1e-14));
        CHECK_THAT(w.water_level, WithinRel(7.5, 1e-14));
        CHECK_THAT(w.capacity, WithinRel(std::log2(7.5) + std::log2(1.875), 1e-14));
        CHECK_THAT(w.capacity, WithinRel(3.814, 1e-3));
    }
    SECTION("Weak channel switched off")
    {
        const auto w = water_fill(make_spectrum({1.0, 0.1}), 1.0, 1.0);
        CHECK(w.active_channels == 1);
        CHECK(w.per_channel_power[1] == 0.0);
        CHECK_THAT(w.capacity, WithinRel(1.0, 1e-15));
    }
    SECTION("KKT conditions on random spectra")
    {
        std::mt19937_64 g(3);
        std::lognormal_distribution<double> ln(0.0, 2.0);
        for (int trial = 0; trial < 200; ++trial)
        {
            std::vector<double> s(1 + trial % 12);
            for (auto &v : s)
                v = ln(g);
            const double P = ln(g), N0 = 0.1 * ln(g);
            const auto sp = make_spectrum(s);
            const auto w = water_fill(sp, P, N0);
            double total = 0;
            for (std::size_t i = 0; i < sp.values.size(); ++i)
            {
                const double p = w.per_channel_power[i], floor = N0 / (sp.values[i] * sp.values[i]);
                total += p;
                CHECK(p >= 0.0);
                if (i < w.active_channels)
                    CHECK_THAT(p + floor, WithinRel(w.water_level, 1e-9));
                else
                {
                    CHECK(p == 0.0);
                    CHECK(floor >= w.water_level * (1 - 1e-12));
                }
            }
            CHECK_THAT(total, WithinRel(P, 1e-9));
        }
    }
    SECTION("Optimality against a grid search")
    {
        const std::vector<std::vector<double>> cases{{1.0, 0.5}, {2.0, 0.3}, {1.0, 0.9, 0.4}, {3.0, 1.0, 0.1}};
        for (const auto &s : cases)
            for (double P : {0.5, 4.0, 20.0})
            {
                const double wf = water_fill(make_spectrum(s), P, 1.0).capacity;
                const double grid = test::water_fill_grid_search(s, P, 1.0, s.size() == 2 ? 20000 : 600);
                CHECK(wf >= grid - 1e-12);
                CHECK(wf - grid < 1e-4);
                double eq = 0;
                for (double v : s)
                    eq += std::log2(1.0 + P / s.size() * v * v);
                CHECK(wf >= eq - 1e-12);
            }
    }
    SECTION("Monotone in power and gain")
    {
        const std::vector<double> s{1.0, 0.6, 0.2, 0.05};
        double prev = 0;
        for (double P = 0.01; P < 1e4; P *= 1.7)
        {
            const double c = water_fill(make_spectrum(s), P, 1.0).capacity;
            CHECK(c >= prev);
            std::vector<double> s2(s);
            for (auto &v : s2)
                v *= 2;
            CHECK(water_fill(make_spectrum(s2), P, 1.0).capacity >= c);
            prev = c;
        }
    }
    SECTION("Errors")
    {
        CHECK_THROWS_AS(water_fill(make_spectrum({0.0}), 1.0, 1.0), nfmimo::domain_error);
        CHECK_THROWS_AS(water_fill(make_spectrum({1.0}), 0.0, 1.0), nfmimo::domain_error);
        CHECK_THROWS_AS(water_fill(make_spectrum({1.0}), 1.0, -1.0), nfmimo::domain_error);
    }
}
