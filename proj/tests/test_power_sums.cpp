/*
 * Copyright 2026 The tracecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "tracecode/power_sums.hpp"
#include "tracecode/trace_poly.hpp"

namespace tc = tracecode;

namespace {

tc::TraceDepPoly rooted(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    tc::TraceDepPoly poly = tc::build_trb(q, n, t);
    tc::enumerate_roots(poly);
    return poly;
}

std::vector<std::uint64_t> indices_of(const tc::El7Prediction& pred) {
    std::vector<std::uint64_t> out;
    out.reserve(pred.entries.size());
    for (const tc::El7Entry& e : pred.entries) out.push_back(e.index);
    return out;
}

}  // namespace

TEST_CASE("power sums by direct summation") {
    const tc::TraceDepPoly poly = rooted(2, 2, 1);
    const tc::PowerSumTable table = tc::power_sums(poly, 12);
    const tc::FieldCtx& f = *poly.ctx;
    for (std::uint64_t i = 1; i <= 12; ++i) {
        std::uint32_t acc = 0;
        for (const std::uint64_t lg : poly.root_logs) {
            acc = f.add(acc, f.gpow(lg * i % f.group_order()));
        }
        CHECK(table.at(i) == acc);
        CHECK(tc::power_sum_at(poly, i) == acc);
    }
    // Past the dense range the table still answers exactly.
    CHECK(table.at(13) == tc::power_sum_at(poly, 13));
    CHECK(table.at(14) == tc::power_sum_at(poly, 14));
    // s_N = m * 1 (every root to the zeroth power... via x^N = 1).
    CHECK(table.at(f.group_order()) == f.from_int(poly.root_logs.size()));
}

TEST_CASE("exceptional predictions") {
    SUBCASE("(2,2,1): indices 3,6,9,12, all +1, barred from the theorem") {
        const tc::El7Prediction pred = tc::predict_el7(2, 2, 1);
        CHECK(pred.era2_excluded);
        CHECK(indices_of(pred) == std::vector<std::uint64_t>{3, 6, 9, 12});
        for (const tc::El7Entry& e : pred.entries) CHECK(e.sign == 1);
    }
    SUBCASE("(2,2,2): indices 5 and 10") {
        const tc::El7Prediction pred = tc::predict_el7(2, 2, 2);
        CHECK_FALSE(pred.era2_excluded);
        CHECK(indices_of(pred) == std::vector<std::uint64_t>{5, 10});
    }
}

TEST_CASE("closed-form indices for the light catalogue triples") {
    CHECK(indices_of(tc::predict_el7(3, 2, 1)) ==
          std::vector<std::uint64_t>{8, 16, 24, 32});
    CHECK(indices_of(tc::predict_el7(5, 2, 1)) ==
          std::vector<std::uint64_t>{24, 48, 72, 96, 120, 144});
    CHECK(indices_of(tc::predict_el7(7, 2, 1)) ==
          std::vector<std::uint64_t>{48, 96, 144, 192, 240, 288, 336, 384});
    CHECK(indices_of(tc::predict_el7(11, 2, 1)) ==
          std::vector<std::uint64_t>{120, 240, 360, 480, 600, 720, 840, 960,
                                     1080, 1200, 1320, 1440});
    CHECK(indices_of(tc::predict_el7(2, 4, 2)) ==
          std::vector<std::uint64_t>{95, 125});
    CHECK(indices_of(tc::predict_el7(2, 4, 3)) ==
          std::vector<std::uint64_t>{111, 123});
    CHECK(indices_of(tc::predict_el7(2, 6, 3)) ==
          std::vector<std::uint64_t>{1791, 2043});
    CHECK(indices_of(tc::predict_el7(2, 6, 5)) ==
          std::vector<std::uint64_t>{1983, 2031});
    CHECK(indices_of(tc::predict_el7(3, 4, 2)) ==
          std::vector<std::uint64_t>{1700, 1940, 2180});
    CHECK(indices_of(tc::predict_el7(3, 4, 3)) ==
          std::vector<std::uint64_t>{2024, 2096, 2168});
    CHECK(indices_of(tc::predict_el7(3, 2, 2)) ==
          std::vector<std::uint64_t>{20});
    CHECK_THROWS_AS(tc::predict_el7(2, 2, 0), std::invalid_argument);
}

TEST_CASE("predictions match brute force, values included") {
    for (const auto& [q, n, t] :
         std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
             {2, 2, 1}, {2, 2, 2}, {2, 4, 2}, {2, 4, 3}, {3, 2, 1}, {3, 2, 2},
             {5, 2, 1}, {5, 2, 2}, {7, 2, 1}}) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(t);
        const tc::TraceDepPoly poly = rooted(q, n, t);
        REQUIRE(poly.property_a());
        const tc::PowerSumTable table = tc::power_sums(poly, poly.degree());
        const tc::El7Prediction pred = tc::predict_el7(q, n, t);
        CHECK(table.nonzero_indices_up_to(poly.degree()) == indices_of(pred));
        const tc::FieldCtx& f = *poly.ctx;
        const std::uint32_t one = f.from_int(1);
        for (const tc::El7Entry& e : pred.entries) {
            CHECK(table.at(e.index) == (e.sign >= 0 ? one : f.neg(one)));
        }
    }
}

TEST_CASE("heavy rows: closed form vs. single power sums") {
    // Full dense sweeps over GF(5^8) are deliberately avoided here; the
    // closed-form indices are instead spot-checked one sum at a time.
    for (const auto& [t, want] :
         std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>>{
             {2, {65624, 68744, 71864, 74984, 78104}},
             {3, {75624, 76224, 76824, 77424, 78024}}}) {
        CAPTURE(t);
        const tc::TraceDepPoly poly = rooted(5, 4, t);
        REQUIRE(poly.property_a());
        const tc::El7Prediction pred = tc::predict_el7(5, 4, t);
        CHECK(indices_of(pred) == want);
        const tc::FieldCtx& f = *poly.ctx;
        const std::uint32_t one = f.from_int(1);
        for (const tc::El7Entry& e : pred.entries) {
            CHECK(tc::power_sum_at(poly, e.index) ==
                  (e.sign >= 0 ? one : f.neg(one)));
        }
        // A handful of off-prediction indices must vanish.
        const std::set<std::uint64_t> predicted(want.begin(), want.end());
        for (const std::uint64_t probe :
             {want.front() - 1, want.front() + 1, want.back() - 1,
              std::uint64_t{1}, std::uint64_t{12345}}) {
            if (predicted.count(probe) == 0) {
                CHECK(tc::power_sum_at(poly, probe) == 0);
            }
        }
    }
}

TEST_CASE("Newton identities hold for the trace-depending polynomials") {
    for (const auto& [q, n, t] :
         std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
             {2, 2, 1}, {3, 2, 1}, {2, 4, 2}, {3, 2, 2}, {5, 2, 1}}) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(t);
        const tc::TraceDepPoly poly = rooted(q, n, t);
        const tc::NewtonReport report =
            tc::verify_newton(poly, 2 * poly.degree() + 7);
        CHECK(report.ok());
        CHECK(report.checked == 2 * poly.degree() + 7);
    }
}

TEST_CASE("Newton identities on random split polynomials") {
    std::mt19937_64 rng(42);
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(3, 4);
    const tc::FieldCtx& f = *ctx;
    const std::uint64_t group = f.group_order();

    for (int trial = 0; trial < 20; ++trial) {
        // Distinct random nonzero roots.
        std::uniform_int_distribution<std::uint64_t> count_dist(1, 40);
        std::set<std::uint64_t> logs;
        const std::uint64_t m = count_dist(rng);
        std::uniform_int_distribution<std::uint64_t> log_dist(0, group - 1);
        while (logs.size() < m) logs.insert(log_dist(rng));
        const std::vector<std::uint64_t> root_logs(logs.begin(), logs.end());

        // Expand prod (X - beta) low-degree first.
        std::vector<std::uint32_t> coeffs = {1};
        for (const std::uint64_t lg : root_logs) {
            const std::uint32_t beta = f.gpow(lg);
            std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = f.add(next[i + 1], coeffs[i]);
                next[i] = f.sub(next[i], f.mul(beta, coeffs[i]));
            }
            coeffs = std::move(next);
        }

        const tc::NewtonReport report =
            tc::verify_newton_dense(ctx, coeffs, root_logs, 2 * m + 5);
        CHECK(report.ok());

        // Corrupting one root must produce violations.
        std::vector<std::uint64_t> bad = root_logs;
        bad[0] = (bad[0] + 1) % group;
        if (!std::binary_search(root_logs.begin(), root_logs.end(), bad[0])) {
            const tc::NewtonReport broken =
                tc::verify_newton_dense(ctx, coeffs, bad, 2 * m + 5);
            CHECK_FALSE(broken.ok());
        }
    }
}

TEST_CASE("verify_newton requires Property (A)") {
    tc::TraceDepPoly poly = rooted(2, 2, 1);
    poly.root_logs.pop_back();  // now root count != degree
    CHECK_THROWS_AS(tc::verify_newton(poly, 10), std::invalid_argument);
}

TEST_CASE("nonzero_indices_up_to rejects out-of-range bounds") {
    const tc::TraceDepPoly poly = rooted(2, 2, 1);
    const tc::PowerSumTable table = tc::power_sums(poly, 12);
    CHECK_THROWS_AS(table.nonzero_indices_up_to(13), std::invalid_argument);
}
