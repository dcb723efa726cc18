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
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "tracecode/subfield.hpp"

namespace tc = tracecode;

namespace {

tc::TraceDepPoly rooted(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    tc::TraceDepPoly poly = tc::build_trb(q, n, t);
    tc::enumerate_roots(poly);
    return poly;
}

void check_partition(const tc::CosetSystem& cs) {
    std::size_t covered = 0;
    for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
        const auto& coset = cs.cosets[i];
        REQUIRE_FALSE(coset.empty());
        CHECK(std::is_sorted(coset.begin(), coset.end()));
        CHECK(coset.front() == cs.min_reps[i]);
        covered += coset.size();
        for (const std::uint64_t x : coset) {
            // Closed under the multiplier and indexed consistently.
            const std::uint64_t y = x * cs.multiplier % cs.modulus;
            CHECK(std::binary_search(coset.begin(), coset.end(), y));
            CHECK(cs.coset_index_of(x) == i);
        }
    }
    CHECK(covered == cs.modulus);
    CHECK(std::is_sorted(cs.min_reps.begin(), cs.min_reps.end()));
}

}  // namespace

TEST_CASE("coset systems over GF(2^8)") {
    SUBCASE("subfield index 1: multiplier 4") {
        const tc::CosetSystem cs = tc::coset_system(2, 4, 1);
        CHECK(cs.modulus == 255);
        CHECK(cs.multiplier == 4);
        check_partition(cs);
        const std::vector<std::uint64_t> head(cs.min_reps.begin(),
                                              cs.min_reps.begin() + 12);
        CHECK(head == std::vector<std::uint64_t>{0, 1, 2, 3, 5, 6, 7, 9, 10,
                                                 11, 13, 14});
        // 85 * 4 = 340 = 85 mod 255: a fixed point forms a singleton coset.
        const std::size_t idx = cs.coset_index_of(85);
        CHECK(cs.cosets[idx] == std::vector<std::uint64_t>{85});
    }
    SUBCASE("subfield index 2: multiplier 16") {
        const tc::CosetSystem cs = tc::coset_system(2, 4, 2);
        CHECK(cs.modulus == 255);
        CHECK(cs.multiplier == 16);
        check_partition(cs);
        for (std::uint64_t i = 0; i < 14; ++i) CHECK(cs.min_reps[i] == i);
        CHECK(cs.cosets[1] == std::vector<std::uint64_t>{1, 16});
    }
}

TEST_CASE("coset systems for the prime-field subfields") {
    const tc::CosetSystem c3 = tc::coset_system(3, 2, 1);
    CHECK(c3.modulus == 80);
    CHECK(c3.multiplier == 9);
    check_partition(c3);
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(c3.min_reps[i] == i);

    const tc::CosetSystem c5 = tc::coset_system(5, 2, 1);
    CHECK(c5.modulus == 624);
    CHECK(c5.multiplier == 25);
    check_partition(c5);
    for (std::uint64_t i = 0; i < 12; ++i) CHECK(c5.min_reps[i] == i);
    CHECK(c5.cosets[0].size() == 1);
    CHECK(c5.cosets[1].size() == 2);
    CHECK(c5.cosets[2].size() == 2);

    const tc::CosetSystem c7 = tc::coset_system(7, 2, 1);
    CHECK(c7.modulus == 2400);
    CHECK(c7.multiplier == 49);
    check_partition(c7);
    for (std::uint64_t i = 0; i < 25; ++i) CHECK(c7.min_reps[i] == i);
}

TEST_CASE("coset system validation") {
    CHECK_THROWS_AS(tc::coset_system(2, 4, 4), std::invalid_argument);  // n'=n
    CHECK_THROWS_AS(tc::coset_system(2, 4, 3), std::invalid_argument);  // 3∤4
    CHECK_THROWS_AS(tc::coset_system(2, 4, 0), std::invalid_argument);
}

TEST_CASE("gamma_tau is the sorted union of leading cosets") {
    const tc::CosetSystem cs = tc::coset_system(2, 4, 2);
    CHECK(tc::gamma_tau(cs, 0) == std::vector<std::uint64_t>{0});
    const std::vector<std::uint64_t> g2 = tc::gamma_tau(cs, 2);
    CHECK(g2 == std::vector<std::uint64_t>{0, 1, 2, 16, 32});
    std::size_t expect = 0;
    for (std::size_t i = 0; i <= 5; ++i) expect += cs.cosets[i].size();
    CHECK(tc::gamma_tau(cs, 5).size() == expect);
    CHECK_THROWS_AS(tc::gamma_tau(cs, cs.min_reps.size()),
                    std::invalid_argument);
}

TEST_CASE("rational floor") {
    CHECK(tc::Rational{63, 5}.floor_value() == 12);
    CHECK(tc::Rational{-7, 2}.floor_value() == -4);
    CHECK(tc::Rational{8, 4}.floor_value() == 2);
    CHECK(tc::Rational{63, 5}.greater_than(12));
    CHECK(tc::Rational{63, 5} < 13);
}

TEST_CASE("subfield self-orthogonality cap D") {
    const tc::BoundSet b1 = tc::d_bound(2, 4, 2, 1);
    CHECK(b1.d == 10);
    CHECK(b1.d_rule == "B");
    CHECK(b1.a == 12);
    CHECK(b1.b == 10);

    const tc::BoundSet b2 = tc::d_bound(2, 4, 1, 2);
    CHECK(b2.d == 12);
    CHECK(b2.d_rule == "floor(C)");
    CHECK(b2.c.num == 63);
    CHECK(b2.c.den == 5);

    const tc::BoundSet b3 = tc::d_bound(7, 2, 1, 1);
    CHECK(b3.d == 5);
    CHECK(b3.d_rule == "q-2");

    CHECK(tc::d_bound(5, 2, 1, 1).d == 3);
    CHECK(tc::d_bound(3, 2, 2, 1).d == 4);
    CHECK(tc::d_bound(3, 2, 2, 1).d_rule == "B");
    CHECK(tc::d_bound(5, 2, 2, 1).d == 16);
    CHECK(tc::d_bound(7, 2, 2, 1).d == 36);
    CHECK(tc::d_bound(2, 4, 2, 2).d == 12);
    CHECK(tc::d_bound(2, 4, 2, 2).d_rule == "A");
    CHECK(tc::d_bound(2, 4, 3, 2).d == 10);
    CHECK(tc::d_bound(2, 4, 1, 1).d == 6);
    CHECK(tc::d_bound(2, 4, 1, 1).d_rule == "B1");
}

TEST_CASE("Gamma(tau) subfield-subcodes of the length-160 code") {
    const tc::TraceDepPoly poly = rooted(2, 4, 2);

    SUBCASE("binary subcode at tau = 8 with the support-remark dimension") {
        const tc::CosetSystem cs = tc::coset_system(2, 4, 1);
        const tc::EvalCode sub = tc::gamma_tau_code(poly, cs, 8);
        CHECK(sub.length == 160);
        CHECK(sub.dim == 32);
        CHECK(sub.alphabet_pdeg == 2);
        CHECK(sub.alphabet_order() == 4);
        CHECK(sub.provenance.at("trace_support_in_gamma") == true);
        REQUIRE(sub.dual_distance_bound.has_value());
        CHECK(*sub.dual_distance_bound == cs.min_reps[9] + 1);
        const tc::EvalCode parent =
            tc::build_eval_code(poly, tc::gamma_tau(cs, 8));
        CHECK(tc::delsarte_subcode_dim(parent, 1) == 32);
    }
    SUBCASE("quaternary subcode at tau = 12") {
        const tc::CosetSystem cs = tc::coset_system(2, 4, 2);
        const tc::EvalCode sub = tc::gamma_tau_code(poly, cs, 12);
        CHECK(sub.length == 160);
        CHECK(sub.dim == 25);  // 2 * tau + 1
        CHECK(sub.alphabet_pdeg == 4);
        REQUIRE(sub.dual_distance_bound.has_value());
        CHECK(*sub.dual_distance_bound == 14);  // g_13 + 1 = 13 + 1
        const tc::EvalCode parent =
            tc::build_eval_code(poly, tc::gamma_tau(cs, 12));
        CHECK(tc::delsarte_subcode_dim(parent, 2) == 25);
    }
}

TEST_CASE("subcode rows embed into the parent code") {
    const tc::TraceDepPoly poly = rooted(2, 4, 2);
    const tc::CosetSystem cs = tc::coset_system(2, 4, 2);
    const std::vector<std::uint64_t> gamma = tc::gamma_tau(cs, 4);
    const tc::EvalCode big = tc::build_eval_code(poly, gamma);
    const tc::EvalCode sub = tc::subfield_subcode(big, 2);
    CHECK(sub.dim == 9);

    const tc::FieldCtx& f = *sub.ctx;
    tc::Matrix stacked = big.gen;
    for (std::size_t r = 0; r < sub.gen.rows(); ++r) {
        std::vector<std::uint32_t> row(sub.gen.row(r),
                                       sub.gen.row(r) + sub.gen.cols());
        for (const std::uint32_t v : row) CHECK(f.in_subfield(v, 4));
        stacked.append_row(row);
    }
    // Every subcode row already lies in the row space of the parent.
    CHECK(stacked.rank() == big.dim);
}

TEST_CASE("subfield-subcode argument checks") {
    const tc::TraceDepPoly poly = rooted(2, 4, 2);
    const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(2));
    CHECK_THROWS_AS(tc::subfield_subcode(code, 3), std::invalid_argument);
    CHECK_THROWS_AS(tc::subfield_subcode(code, 0), std::invalid_argument);
}
