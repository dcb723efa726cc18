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

#include "tracecode/eval_code.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tracecode {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % mod);
}

// C(n, k) saturating at `cap` (avoids overflow; only the <= cap decision
// matters to callers).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: prefix products are binomials
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t EvalCode::alphabet_order() const {
    if (!ctx) return 0;
    return checked_pow_u64(ctx->characteristic(), alphabet_pdeg,
                           FieldCtx::kOrderCap);
}

std::uint64_t a_bound(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    if (n == 0 || t == 0 || t > n) {
        throw std::invalid_argument("a_bound: need 0 < t <= n");
    }
    auto qpow = [&](std::uint32_t e) {
        return checked_pow_u64(q, e, ~std::uint64_t{0});
    };
    if (q == 2) {
        if (t == n) return qpow(n - 1) - 2;
        return qpow(n) - qpow(t - 1) - 2;
    }
    const std::uint64_t h = (q - 1 + 1) / 2;  // ceil((q-1)/2)
    if (t == n) return qpow(n - 1) - 2;
    if (2 * t <= n) return qpow(n) - h * qpow(n - 1) - h * qpow(n - t - 1) - 2;
    return qpow(n) - h * qpow(n - 1) - h * qpow(t - 1) - 2;
}

std::vector<std::uint64_t> delta_tau(std::uint64_t tau) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(tau) + 1);
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    return out;
}

EvalCode build_eval_code(const TraceDepPoly& poly,
                         const std::vector<std::uint64_t>& delta) {
    if (!poly.ctx) throw std::invalid_argument("build_eval_code: unbound polynomial");
    if (delta.empty()) throw std::invalid_argument("build_eval_code: empty exponent set");
    if (poly.root_logs.empty()) {
        throw std::invalid_argument("build_eval_code: no enumerated roots");
    }
    if (poly.zero_dropped) {
        throw std::invalid_argument(
            "build_eval_code: evaluation points must all be nonzero");
    }
    const FieldCtx& f = *poly.ctx;
    const std::uint64_t N = f.group_order();

    EvalCode code;
    code.ctx = poly.ctx;
    code.q = poly.q;
    code.n = poly.n;
    code.delta = delta;
    std::sort(code.delta.begin(), code.delta.end());
    code.delta.erase(std::unique(code.delta.begin(), code.delta.end()),
                     code.delta.end());
    code.length = poly.root_logs.size();
    code.alphabet_pdeg = f.degree();

    code.gen = Matrix(poly.ctx, code.delta.size(), code.length);
    for (std::size_t r = 0; r < code.delta.size(); ++r) {
        const std::uint64_t e = code.delta[r] % N;
        std::uint32_t* row = code.gen.row(r);
        for (std::size_t c = 0; c < code.length; ++c) {
            row[c] = f.gpow(mulmod_u64(poly.root_logs[c], e, N));
        }
    }
    code.dim = code.gen.rank();
    code.provenance = {{"construction", "evaluation"},
                       {"q", poly.q},
                       {"n", poly.n},
                       {"delta", code.delta},
                       {"zero_root_dropped", poly.zero_dropped}};
    if (poly.kind == TraceKind::kBth) {
        code.provenance["t"] = poly.t;
        code.provenance["b"] = poly.b;
    }
    return code;
}

std::uint32_t hermitian_product(const FieldCtx& ctx,
                                const std::vector<std::uint32_t>& x,
                                const std::vector<std::uint32_t>& y,
                                std::uint64_t conj_power) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hermitian_product: length mismatch");
    }
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = ctx.add(acc, ctx.mul(x[i], ctx.pow(y[i], conj_power)));
    }
    return acc;
}

SOCertificate check_self_orthogonal(const EvalCode& code,
                                    std::uint64_t conj_power) {
    const FieldCtx& f = *code.ctx;
    SOCertificate cert;
    cert.conj_power = conj_power;
    cert.gram_zero = true;

    // Conjugate the generator once; Gram entries are then plain products.
    Matrix conj = code.gen;
    for (std::size_t r = 0; r < conj.rows(); ++r) {
        std::uint32_t* row = conj.row(r);
        for (std::size_t c = 0; c < conj.cols(); ++c) {
            row[c] = f.pow(row[c], conj_power);
        }
    }
    for (std::size_t i = 0; i < code.gen.rows() && cert.gram_zero; ++i) {
        const std::uint32_t* a = code.gen.row(i);
        for (std::size_t j = 0; j < conj.rows(); ++j) {
            const std::uint32_t* b = conj.row(j);
            std::uint32_t acc = 0;
            for (std::size_t c = 0; c < code.gen.cols(); ++c) {
                acc = f.add(acc, f.mul(a[c], b[c]));
            }
            if (acc != 0) {
                cert.gram_zero = false;
                cert.witness_i = i;
                cert.witness_j = j;
                cert.witness_value = acc;
                break;
            }
        }
    }
    return cert;
}

namespace {

// Column-subset rank probe: true iff the generator columns `cols` are
// linearly independent.
bool columns_independent(const EvalCode& code,
                         const std::vector<std::size_t>& cols) {
    Matrix sub(code.ctx, code.gen.rows(), cols.size());
    for (std::size_t r = 0; r < code.gen.rows(); ++r) {
        const std::uint32_t* row = code.gen.row(r);
        std::uint32_t* dst = sub.row(r);
        for (std::size_t j = 0; j < cols.size(); ++j) dst[j] = row[cols[j]];
    }
    return sub.rref_in_place() == cols.size();
}

}  // namespace

DistanceCertificate certify_dual_distance(const EvalCode& code,
                                          std::uint32_t delta_target,
                                          std::uint64_t budget,
                                          std::uint32_t trials,
                                          std::uint64_t seed) {
    if (delta_target < 2) {
        throw std::invalid_argument("certify_dual_distance: target must be >= 2");
    }
    DistanceCertificate cert;
    cert.delta_target = delta_target;
    const std::size_t k = delta_target - 1;
    const std::size_t len = code.length;
    if (k > len) {
        // No k-subset exists; the condition is vacuous.
        cert.status = DistanceStatus::kCertified;
        cert.exhaustive = true;
        return cert;
    }

    const std::uint64_t total = binomial_capped(len, k, budget);
    if (total <= budget) {
        // Exhaustive sweep in lexicographic order.
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        while (true) {
            ++cert.subsets_checked;
            if (!columns_independent(code, cols)) {
                cert.status = DistanceStatus::kRefuted;
                cert.witness_columns = cols;
                return cert;
            }
            // Next combination.
            std::size_t i = k;
            while (i > 0 && cols[i - 1] == len - k + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
        }
        cert.status = DistanceStatus::kCertified;
        cert.exhaustive = true;
        return cert;
    }

    // Seeded random subsets; never certifies.
    std::mt19937_64 rng(seed);
    auto uniform_below = [&rng](std::uint64_t bound) {
        // Rejection sampling keeps the draw exactly uniform.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = rng();
        while (v >= limit) v = rng();
        return v % bound;
    };
    for (std::uint32_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> cols;
        while (cols.size() < k) {
            const std::size_t c =
                static_cast<std::size_t>(uniform_below(len));
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
                cols.push_back(c);
            }
        }
        std::sort(cols.begin(), cols.end());
        ++cert.subsets_checked;
        if (!columns_independent(code, cols)) {
            cert.status = DistanceStatus::kRefuted;
            cert.witness_columns = cols;
            return cert;
        }
    }
    cert.status = DistanceStatus::kSampledOnly;
    return cert;
}

std::uint64_t true_min_distance(const EvalCode& code, std::uint64_t cap) {
    if (code.dim == 0) {
        throw std::invalid_argument("true_min_distance: zero-dimensional code");
    }
    const FieldCtx& f = *code.ctx;
    const std::vector<std::uint32_t> alphabet =
        f.subfield_members(code.alphabet_pdeg);
    const std::uint64_t a = alphabet.size();

    // Message count a^dim against the cap, overflow-safe.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < code.dim; ++i) {
        if (count > cap / a) {
            throw std::invalid_argument("true_min_distance: message space exceeds cap");
        }
        count *= a;
    }

    // A row basis of the code: independent rows of gen (first dim rows of
    // gen when already independent; otherwise extracted via RREF).
    Matrix basis(code.ctx, 0, 0);
    if (code.gen.rows() == code.dim) {
        basis = code.gen;
    } else {
        Matrix r = code.gen;
        r.rref_in_place();
        for (std::size_t i = 0; i < code.dim; ++i) {
            basis.append_row(std::vector<std::uint32_t>(
                r.row(i), r.row(i) + r.cols()));
        }
    }

    // Mixed-radix odometer over messages with incremental codeword updates.
    std::vector<std::size_t> digit(code.dim, 0);
    std::vector<std::uint32_t> word(code.length, 0);
    std::uint64_t best = code.length + 1;
    for (std::uint64_t step = 1; step < count; ++step) {
        std::size_t pos = 0;
        while (true) {
            const std::uint32_t old_sym = alphabet[digit[pos]];
            digit[pos] = (digit[pos] + 1) % a;
            const std::uint32_t new_sym = alphabet[digit[pos]];
            const std::uint32_t delta = f.sub(new_sym, old_sym);
            const std::uint32_t* row = basis.row(pos);
            for (std::size_t c = 0; c < code.length; ++c) {
                if (row[c] != 0) word[c] = f.add(word[c], f.mul(delta, row[c]));
            }
            if (digit[pos] != 0) break;
            ++pos;  // rolled over; carry into the next digit
        }
        std::uint64_t w = 0;
        for (std::size_t c = 0; c < code.length; ++c) w += (word[c] != 0);
        if (w != 0 && w < best) best = w;
    }
    return best;
}

}  // namespace tracecode
