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

#include "tracecode/quantum.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracecode {

using boost::multiprecision::cpp_int;

nlohmann::json QuantumParams::to_json() const {
    return nlohmann::json{{"n", n},
                          {"k", k},
                          {"d", d},
                          {"d_kind", d_exact ? "exact" : "lower"},
                          {"q", q},
                          {"derivation", derivation}};
}

QuantumParams stabilizer_from_so(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t d_bound, std::uint64_t Q,
                                 const std::string& step) {
    if (2 * k > n) {
        throw std::invalid_argument("stabilizer_from_so: need 2k <= n");
    }
    QuantumParams p;
    p.n = n;
    p.q = Q;
    p.d_exact = false;
    if (k == 0) {
        // Trivial stabilizer: the dual is the full space, distance >= 1.
        p.k = n;
        p.d = 1;
    } else {
        p.k = n - 2 * k;
        p.d = d_bound;
    }
    p.derivation.push_back(step);
    {
        std::ostringstream ss;
        ss << "stabilizer_from_so: [" << n << "," << k << "] Hermitian"
           << " self-orthogonal -> [[" << p.n << "," << p.k << ",>=" << p.d
           << "]]_" << Q;
        p.derivation.push_back(ss.str());
    }
    return p;
}

QuantumParams expand_basefield(const EvalCode& code, std::uint32_t r,
                               const SOCertificate& cert) {
    if (!code.ctx) throw std::invalid_argument("expand_basefield: unbound code");
    if (!cert.gram_zero) {
        throw std::invalid_argument("expand_basefield: certificate is not a pass");
    }
    const std::uint64_t conj =
        checked_pow_u64(code.q, r, ~std::uint64_t{0});
    if (cert.conj_power != conj) {
        throw std::invalid_argument("expand_basefield: certificate conjugation mismatch");
    }
    // The code must be linear over GF(q^{2r}).
    std::uint32_t p = 0, e = 0;
    factor_prime_power(code.q, p, e);
    if (code.alphabet_pdeg != 2 * r * e) {
        throw std::invalid_argument("expand_basefield: alphabet is not GF(q^{2r})");
    }

    QuantumParams out;
    out.q = code.q;
    out.n = static_cast<std::uint64_t>(r) * code.length;
    out.k = out.n - 2 * static_cast<std::uint64_t>(r) * code.dim;
    out.d = code.dual_distance_bound.value_or(1);
    out.d_exact = false;
    {
        std::ostringstream ss;
        ss << "expand_basefield: [" << code.length << "," << code.dim
           << "] over GF(" << code.q << "^" << 2 * r
           << "), conj q^" << r << " -> [[" << out.n << "," << out.k << ",>="
           << out.d << "]]_" << out.q;
        out.derivation.push_back(ss.str());
    }
    return out;
}

std::vector<QuantumParams> propagate(const QuantumParams& p) {
    std::vector<QuantumParams> out;
    if (p.k >= 1) {
        QuantumParams a = p;
        a.k -= 1;
        a.d_exact = false;
        std::ostringstream ss;
        ss << "propagate: [[" << p.n << "," << p.k << "," << p.d << "]] -> [["
           << a.n << "," << a.k << ",>=" << a.d << "]]";
        a.derivation.push_back(ss.str());
        out.push_back(std::move(a));
    }
    {
        QuantumParams b = p;
        b.n += 1;
        std::ostringstream ss;
        ss << "propagate: [[" << p.n << "," << p.k << "," << p.d << "]] -> [["
           << b.n << "," << b.k << "," << b.d << "]]";
        b.derivation.push_back(ss.str());
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

cpp_int binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    cpp_int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

bool feng_ma_exists(std::uint64_t q, std::uint64_t n, std::uint64_t k,
                    std::uint64_t d) {
    if (n <= k) throw std::invalid_argument("feng_ma_exists: need n > k");
    if (d < 2) return true;  // [[n, k, 1]] always exists
    const cpp_int q2m1 = cpp_int(q) * q - 1;
    // lhs > rhs with lhs = (q^{n-k+2} - 1) / (q^2 - 1); compare without the
    // division: q^{n-k+2} - 1 > rhs * (q^2 - 1).
    cpp_int lhs = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - k + 2)) - 1;
    cpp_int rhs = 0;
    cpp_int power = 1;  // (q^2 - 1)^{i-1}
    for (std::uint64_t i = 1; i < d; ++i) {
        rhs += binomial_exact(n, i) * power;
        power *= q2m1;
    }
    return lhs > rhs * q2m1;
}

std::uint64_t gv_max_d(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    std::uint64_t best = 1;
    for (std::uint64_t d = 2; d <= n; ++d) {
        if (!feng_ma_exists(q, n, k, d)) break;
        best = d;
    }
    return best;
}

bool exceeds_gv(const QuantumParams& p) {
    if (p.d <= 1) return true;  // vacuous
    if (p.n <= p.k) {
        throw std::invalid_argument("exceeds_gv: need n > k for d >= 2");
    }
    return p.d > gv_max_d(p.q, p.n, p.k);
}

}  // namespace tracecode
