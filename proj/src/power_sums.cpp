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

#include "tracecode/power_sums.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tracecode {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % mod);
}

}  // namespace

// ===========================================================================
// PowerSumTable
// ===========================================================================

PowerSumTable::PowerSumTable(const TraceDepPoly& poly, std::uint64_t dense_limit)
    : ctx_(poly.ctx), root_logs_(poly.root_logs), dense_limit_(dense_limit) {
    if (!ctx_) throw std::invalid_argument("power_sums: unbound polynomial");
    const FieldCtx& f = *ctx_;
    dense_.assign(static_cast<std::size_t>(dense_limit_) + 1, 0);

    // Rolling ladders: cur[j] = beta_j^i at step i.
    std::vector<std::uint32_t> cur(root_logs_.size());
    std::vector<std::uint32_t> base(root_logs_.size());
    for (std::size_t j = 0; j < root_logs_.size(); ++j) {
        cur[j] = 1;
        base[j] = f.gpow(root_logs_[j]);
    }
    for (std::uint64_t i = 1; i <= dense_limit_; ++i) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            cur[j] = f.mul(cur[j], base[j]);
            s = f.add(s, cur[j]);
        }
        dense_[static_cast<std::size_t>(i)] = s;
    }
}

std::uint32_t PowerSumTable::at(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("power sums: index must be >= 1");
    const FieldCtx& f = *ctx_;
    const std::uint64_t N = f.group_order();
    // beta^i depends only on i mod N for nonzero beta, with i = N staying N.
    std::uint64_t ii = i % N;
    if (ii == 0) ii = N;
    if (ii <= dense_limit_) return dense_[static_cast<std::size_t>(ii)];
    std::uint32_t s = 0;
    for (std::uint64_t lg : root_logs_) {
        s = f.add(s, f.gpow(mulmod_u64(lg, ii, N)));
    }
    return s;
}

std::vector<std::uint64_t> PowerSumTable::nonzero_indices_up_to(
    std::uint64_t bound) const {
    if (bound > dense_limit_) {
        throw std::invalid_argument("power sums: bound exceeds the dense range");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 1; i <= bound; ++i) {
        if (dense_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
    }
    return out;
}

PowerSumTable power_sums(const TraceDepPoly& poly, std::uint64_t up_to) {
    return PowerSumTable(poly, up_to);
}

std::uint32_t power_sum_at(const TraceDepPoly& poly, std::uint64_t i) {
    return PowerSumTable(poly, 0).at(i);
}

// ===========================================================================
// Closed-form predictions
// ===========================================================================

El7Prediction predict_el7(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    if (q < 2 || n == 0 || t == 0 || t > n) {
        throw std::invalid_argument("predict_el7: need q >= 2, 0 < t <= n");
    }
    auto qpow = [&](std::uint32_t e) {
        return checked_pow_u64(q, e, ~std::uint64_t{0});
    };

    El7Prediction out;
    if (q == 2 && n == 2 && t == 1) {
        // Exceptional triple (q, n, b) = (2, 2, 3): four indices, all +1,
        // and the triple is excluded from the Delta(tau) theorem.
        out.entries = {{3, +1}, {6, +1}, {9, +1}, {12, +1}};
        out.era2_excluded = true;
        return out;
    }
    if (q == 2 && n == 2 && t == 2) {
        // Exceptional case q = t = n = 2 (in characteristic 2, -1 = +1).
        out.entries = {{5, +1}, {10, +1}};
        return out;
    }
    if (t == n) {
        out.entries = {{qpow(2 * n - 1) - qpow(n) + qpow(n - 1) - 1, +1}};
        return out;
    }

    const std::uint64_t m = qpow(2 * n - 1 - t) + qpow(2 * n - 1);
    if (t == 1) {
        // q + 1 indices: i_0 * {1, ..., q} and one extra past q*i_0; the
        // values alternate +1 / -1 along the ascending list.
        const std::uint64_t i0 = qpow(2 * n - 2) - 1;
        std::vector<std::uint64_t> idx;
        for (std::uint64_t k = 1; k <= q; ++k) idx.push_back(k * i0);
        idx.push_back(q * i0 + (qpow(2 * n - 2) - qpow(2 * n - 3) + q - 1));
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            out.entries.push_back({idx[pos], pos % 2 == 0 ? +1 : -1});
        }
        return out;
    }

    // 1 < t < n: exactly q indices.
    const std::uint64_t k1 = 1 + qpow(2 * n - t);
    const std::uint64_t kt = qpow(t - 1) * k1;
    out.entries.push_back({m - k1, +1});
    out.entries.push_back({2 * m - k1 - kt, -1});
    for (std::uint64_t ell = 0; ell + 2 < q; ++ell) {
        const std::uint64_t j2 =
            1 + (2 + ell) * qpow(t - 1) + (q - (2 + ell)) * qpow(2 * n - t - 1);
        out.entries.push_back({m - j2, ell % 2 == 0 ? +1 : -1});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const El7Entry& a, const El7Entry& b) { return a.index < b.index; });
    return out;
}

// ===========================================================================
// Newton identities
// ===========================================================================

namespace {

// Shared identity checker over a sparse coefficient map exponent -> code.
NewtonReport run_newton(const FieldCtx& f,
                        const std::map<std::uint64_t, std::uint32_t>& coeff,
                        std::uint64_t m, const PowerSumTable& s,
                        std::uint64_t r_max) {
    NewtonReport report;
    report.r_max = r_max;
    const std::uint32_t p = f.characteristic();
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        std::uint32_t lhs = 0;
        // sum over support entries a_{m-j} with 0 <= j <= min(r-1, m)
        // (j <= m always holds: exponents do not exceed m); the term is
        // a_{m-j} * s_{r-j} = coeff(e) * s_{r-m+e}.
        for (const auto& [e, c] : coeff) {
            const std::uint64_t j = m - e;
            if (r <= m && j > r - 1) continue;  // r <= m sums j <= r-1 only
            lhs = f.add(lhs, f.mul(c, s.at(r - j)));
        }
        if (r <= m) {
            // + r * a_{m-r} with r reduced into the prime subfield.
            const auto it = coeff.find(m - r);
            if (it != coeff.end()) {
                const std::uint32_t r_mod_p =
                    static_cast<std::uint32_t>(r % p);
                lhs = f.add(lhs, f.mul(r_mod_p, it->second));
            }
        }
        ++report.checked;
        if (lhs != 0 && report.violations.size() < 32) {
            report.violations.push_back({r, lhs});
        }
    }
    return report;
}

}  // namespace

NewtonReport verify_newton(const TraceDepPoly& poly, std::uint64_t r_max) {
    if (!poly.ctx) throw std::invalid_argument("verify_newton: unbound polynomial");
    if (poly.root_count() != poly.degree()) {
        throw std::invalid_argument(
            "verify_newton: root multiset does not match the degree");
    }
    std::map<std::uint64_t, std::uint32_t> coeff;
    for (const TraceMonomial& mono : poly.support) coeff[mono.exponent] = mono.coeff;
    const std::uint64_t dense =
        std::min<std::uint64_t>(r_max, poly.ctx->group_order());
    const PowerSumTable s(poly, dense);
    return run_newton(*poly.ctx, coeff, poly.degree(), s, r_max);
}

NewtonReport verify_newton_dense(const FieldCtxPtr& ctx,
                                 const std::vector<std::uint32_t>& coeffs,
                                 const std::vector<std::uint64_t>& root_logs,
                                 std::uint64_t r_max) {
    if (!ctx) throw std::invalid_argument("verify_newton_dense: null context");
    if (coeffs.empty()) {
        throw std::invalid_argument("verify_newton_dense: empty polynomial");
    }
    const std::uint64_t m = coeffs.size() - 1;
    if (root_logs.size() != m) {
        throw std::invalid_argument(
            "verify_newton_dense: root count must equal the degree");
    }
    std::map<std::uint64_t, std::uint32_t> coeff;
    for (std::uint64_t e = 0; e <= m; ++e) {
        if (coeffs[static_cast<std::size_t>(e)] != 0) {
            coeff[e] = coeffs[static_cast<std::size_t>(e)];
        }
    }
    // Borrow the table machinery via a minimal polynomial shell.
    TraceDepPoly shell;
    shell.ctx = ctx;
    shell.root_logs = root_logs;
    const std::uint64_t dense = std::min<std::uint64_t>(r_max, ctx->group_order());
    const PowerSumTable s(shell, dense);
    return run_newton(*ctx, coeff, m, s, r_max);
}

}  // namespace tracecode
