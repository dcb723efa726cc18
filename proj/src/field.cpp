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

#include "tracecode/field.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tracecode {

namespace detail {
const std::vector<ModulusEntry>& builtin_moduli();
}  // namespace detail

// ===========================================================================
// Integer helpers
// ===========================================================================

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                              std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) {
            throw std::overflow_error("checked_pow_u64: power exceeds limit");
        }
        r *= base;
    }
    return r;
}

void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) throw std::invalid_argument("factor_prime_power: q must be >= 2");
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    std::uint64_t base = (d * d <= q) ? d : q;
    std::uint32_t exp = 0;
    std::uint64_t rest = q;
    while (rest % base == 0) {
        rest /= base;
        ++exp;
    }
    if (rest != 1) {
        throw std::invalid_argument("factor_prime_power: q is not a prime power");
    }
    p = static_cast<std::uint32_t>(base);
    e = exp;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over GF(p), low-degree-first dense vectors.
// Used for modulus validation and the deterministic fallback search only.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint32_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    std::vector<std::uint64_t> buf(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            buf[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    for (auto& c : buf) c %= p;
    for (std::size_t d = buf.size(); d-- > m;) {
        if (buf[d] == 0) continue;
        const std::uint64_t c = buf[d];
        buf[d] = 0;
        // x^m == -sum f_i x^i  (f monic).
        for (std::size_t i = 0; i < m; ++i) {
            buf[d - m + i] = (buf[d - m + i] + c * (p - f[i])) % p;
        }
    }
    Poly out(m, 0);
    for (std::size_t i = 0; i < m && i < buf.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(buf[i]);
    }
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
    Poly r(f.size() - 1, 0);
    r[0] = 1;
    while (exp != 0) {
        if (exp & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

// True iff f (monic, degree m) is irreducible with X primitive modulo f.
// X having multiplicative order exactly p^m − 1 forces every nonzero
// residue to be a unit, which already implies irreducibility.
bool x_is_primitive_mod(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < m; ++i) n *= p;
    n -= 1;
    Poly x(m, 0);
    if (m == 1) {
        x[0] = (p - f[0]) % p;  // class of X is -f_0
        if (x[0] == 0) return false;
    } else {
        x[1] = 1;
    }
    if (!poly_is_one(poly_powmod(x, n, f, p))) return false;
    for (std::uint64_t r : prime_factors_u64(n)) {
        if (poly_is_one(poly_powmod(x, n / r, f, p))) return false;
    }
    return true;
}

// Deterministic fallback when no table entry covers (p, m): the
// lexicographically-least (on the low-to-high coefficient tuple) monic
// polynomial of degree m over GF(p) whose residue class of X is primitive.
Poly least_primitive_modulus(std::uint32_t p, std::uint32_t m) {
    const std::uint64_t count = checked_pow_u64(p, m, std::uint64_t{1} << 62);
    Poly f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (f[0] == 0) continue;  // X must be invertible
        if (x_is_primitive_mod(f, p)) return f;
    }
    throw std::runtime_error("no primitive modulus found");
}

std::vector<ModulusEntry> load_env_moduli() {
    std::vector<ModulusEntry> out;
    const char* dir = std::getenv("TRACECODE_CONWAY_DIR");
    if (dir == nullptr || *dir == '\0') return out;
    std::ifstream in(std::string(dir) + "/conway.txt");
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        ModulusEntry e;
        if (!(ss >> e.p >> e.m)) continue;
        std::uint32_t c;
        while (ss >> c) e.coeffs.push_back(c);
        if (e.coeffs.size() == e.m + 1 && e.coeffs.back() == 1) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace

// ===========================================================================
// Modulus catalogue
// ===========================================================================

const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> merged = [] {
        std::vector<ModulusEntry> v = load_env_moduli();
        for (const auto& e : detail::builtin_moduli()) {
            bool shadowed = false;
            for (const auto& env : v) {
                if (env.p == e.p && env.m == e.m) {
                    shadowed = true;
                    break;
                }
            }
            if (!shadowed) v.push_back(e);
        }
        return v;
    }();
    return merged;
}

std::optional<ModulusEntry> find_modulus(std::uint32_t p, std::uint32_t m) {
    for (const auto& e : modulus_table()) {
        if (e.p == p && e.m == m) return e;
    }
    return std::nullopt;
}

// ===========================================================================
// FieldCtx
// ===========================================================================

FieldCtxPtr FieldCtx::create(std::uint32_t p, std::uint32_t m) {
    if (!is_prime_u32(p)) {
        throw std::invalid_argument("field_new: characteristic must be prime");
    }
    if (m == 0) {
        throw std::invalid_argument("field_new: extension degree must be positive");
    }
    std::uint64_t q = 0;
    try {
        q = checked_pow_u64(p, m, kOrderCap);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("field_new: p^m exceeds the order cap");
    }

    static std::atomic<std::uint64_t> next_id{1};
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->q_ = q;
    ctx->n_ = q - 1;
    ctx->ctx_id_ = next_id.fetch_add(1);

    if (auto entry = find_modulus(p, m)) {
        ctx->modulus_ = entry->coeffs;
        ctx->modulus_from_table_ = true;
        if (!x_is_primitive_mod(ctx->modulus_, p)) {
            throw std::logic_error("field_new: table modulus is not primitive");
        }
    } else {
        ctx->modulus_ = least_primitive_modulus(p, m);
        ctx->modulus_from_table_ = false;
    }

    if (m == 1) {
        ctx->gen_ = (p - ctx->modulus_[0]) % p;  // class of X is -f_0
    } else {
        ctx->gen_ = p;  // code of the monomial x
    }

    if (q <= kTableCap) ctx->build_tables();
    return ctx;
}

std::string FieldCtx::name() const {
    std::ostringstream ss;
    ss << "GF(" << p_;
    if (m_ > 1) ss << "^" << m_;
    ss << ")";
    return ss.str();
}

std::uint32_t FieldCtx::mul_by_x(std::uint32_t a) const {
    // Unpack, shift one degree up, reduce once by the monic modulus.
    std::vector<std::uint32_t> c(m_ + 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i + 1] = a % p_;
        a /= p_;
    }
    const std::uint32_t top = c[m_];
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) {
        std::uint32_t digit = c[i];
        if (top != 0) {
            digit = (digit + (p_ - modulus_[i]) * top) % p_;
        }
        out = out * p_ + digit;
    }
    return out;
}

void FieldCtx::build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    const std::size_t n = static_cast<std::size_t>(n_);

    exp_.assign(2 * n, 0);
    log_.assign(q, 0);
    std::uint32_t y = 1;
    for (std::size_t i = 0; i < n; ++i) {
        exp_[i] = y;
        exp_[i + n] = y;
        log_[y] = static_cast<std::uint32_t>(i);
        y = mul_by_x(y);
    }
    if (y != 1) {
        throw std::logic_error("field tables: generator order is not p^m - 1");
    }

    if (p_ != 2) {
        // Digitwise addition via two half-width tables.
        const std::uint32_t mlo = (m_ + 1) / 2;
        qlo_ = static_cast<std::uint32_t>(checked_pow_u64(p_, mlo, kTableCap));
        qhi_ = static_cast<std::uint32_t>(q / qlo_);
        auto build = [&](std::uint32_t width, std::uint32_t count,
                         std::uint32_t scale) {
            std::vector<std::uint32_t> t(
                static_cast<std::size_t>(count) * count);
            for (std::uint32_t a = 0; a < count; ++a) {
                for (std::uint32_t b = 0; b < count; ++b) {
                    std::uint32_t av = a, bv = b, mul = 1, s = 0;
                    for (std::uint32_t i = 0; i < width; ++i) {
                        s += ((av + bv) % p_) * mul;
                        av /= p_;
                        bv /= p_;
                        mul *= p_;
                    }
                    t[static_cast<std::size_t>(a) * count + b] = s * scale;
                }
            }
            return t;
        };
        add_lo_ = build(mlo, qlo_, 1);
        add_hi_ = build(m_ - mlo, qhi_, qlo_);
    }

    zech_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t s = add(1, exp_[i]);
        zech_[i] = (s == 0) ? static_cast<std::uint32_t>(n_) : log_[s];
    }
    has_tables_ = true;
}

// --- codecs ----------------------------------------------------------------

std::uint32_t FieldCtx::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m_) {
        throw std::invalid_argument("from_coeffs: too many coordinates");
    }
    std::uint32_t out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) {
            throw std::invalid_argument("from_coeffs: coordinate out of range");
        }
        out = out * p_ + coeffs[i];
    }
    return out;
}

std::vector<std::uint32_t> FieldCtx::coeffs_of(std::uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("coeffs_of: code out of range");
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

std::uint32_t FieldCtx::from_int(std::uint64_t c) const {
    return static_cast<std::uint32_t>(c % p_);
}

// --- arithmetic -------------------------------------------------------------

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (has_tables_ || !add_lo_.empty()) {
        return add_hi_[static_cast<std::size_t>(a / qlo_) * qhi_ + b / qlo_] +
               add_lo_[static_cast<std::size_t>(a % qlo_) * qlo_ + b % qlo_];
    }
    std::uint32_t out = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((a + b) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * mul;
        a /= p_;
        mul *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
        return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    return mul_poly_basis(a, b);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inv: zero has no inverse");
    if (has_tables_) {
        const std::uint32_t l = log_[a];
        return exp_[(n_ - l) % n_];
    }
    return pow(a, n_ - 1);  // a^(N-1) = a^{-1} since a^N = 1
}

std::uint32_t FieldCtx::div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables_) {
        const std::uint64_t l = log_[a];
        return exp_[(l * (e % n_)) % n_];
    }
    std::uint32_t r = 1;
    e %= n_;
    while (e != 0) {
        if (e & 1) r = mul_poly_basis(r, a);
        a = mul_poly_basis(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::gpow(std::uint64_t e) const {
    if (has_tables_) return exp_[e % n_];
    return pow(gen_, e % n_);
}

std::uint64_t FieldCtx::log(std::uint32_t a) const {
    if (!has_tables_) {
        throw std::logic_error("log: no discrete-log table for this field size");
    }
    if (a == 0 || a >= q_) {
        throw std::invalid_argument("log: argument must be a nonzero element");
    }
    return log_[a];
}

std::uint32_t FieldCtx::mul_poly_basis(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint64_t> buf(2 * m_ - 1, 0);
    std::vector<std::uint32_t> ac(m_), bc(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        ac[i] = a % p_;
        a /= p_;
        bc[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (ac[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            buf[i + j] += static_cast<std::uint64_t>(ac[i]) * bc[j];
        }
    }
    for (auto& c : buf) c %= p_;
    for (std::size_t d = buf.size(); d-- > m_;) {
        if (buf[d] == 0) continue;
        const std::uint64_t c = buf[d];
        buf[d] = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            buf[d - m_ + i] = (buf[d - m_ + i] + c * (p_ - modulus_[i])) % p_;
        }
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) {
        out = out * p_ + static_cast<std::uint32_t>(buf[i]);
    }
    return out;
}

std::uint64_t FieldCtx::zech_log(std::uint64_t i) const {
    if (!has_tables_) {
        throw std::logic_error("zech_log: no table for this field size");
    }
    if (i >= n_) throw std::invalid_argument("zech_log: index out of range");
    return zech_[i];
}

// --- field structure ---------------------------------------------------------

std::uint32_t FieldCtx::frobenius(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return 0;
    return pow(a, powmod_u64(p_, e, n_));
}

std::uint32_t FieldCtx::trace_map(std::uint32_t a, std::uint32_t from_pdeg,
                                  std::uint32_t to_pdeg) const {
    if (to_pdeg == 0 || from_pdeg % to_pdeg != 0 || m_ % from_pdeg != 0) {
        throw std::invalid_argument("trace_map: degree divisibility violated");
    }
    if (!in_subfield(a, from_pdeg)) {
        throw std::invalid_argument("trace_map: element outside source subfield");
    }
    std::uint32_t s = 0, y = a;
    const std::uint32_t steps = from_pdeg / to_pdeg;
    for (std::uint32_t i = 0; i < steps; ++i) {
        s = add(s, y);
        y = frobenius(y, to_pdeg);
    }
    return s;
}

std::vector<std::uint32_t> FieldCtx::subfield_members(std::uint32_t sub_pdeg) const {
    if (sub_pdeg == 0 || m_ % sub_pdeg != 0) {
        throw std::invalid_argument("subfield_members: degree must divide m");
    }
    const std::uint64_t sub_order = checked_pow_u64(p_, sub_pdeg, q_);
    const std::uint64_t step = n_ / (sub_order - 1);
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(sub_order));
    out.push_back(0);
    for (std::uint64_t k = 0; k + 1 < sub_order; ++k) {
        out.push_back(gpow(k * step));
    }
    return out;
}

bool FieldCtx::in_subfield(std::uint32_t a, std::uint32_t sub_pdeg) const {
    return frobenius(a, sub_pdeg) == a;
}

// ===========================================================================
// Fq
// ===========================================================================

Fq::Fq(FieldCtxPtr ctx, std::uint32_t code) : ctx_(std::move(ctx)), code_(code) {
    if (!ctx_) throw std::invalid_argument("Fq: null field context");
    if (code_ >= ctx_->order()) {
        throw std::invalid_argument("Fq: code out of range for field");
    }
}

const FieldCtx& Fq::common_ctx(const Fq& a, const Fq& b) {
    if (!a.ctx_ || !b.ctx_) {
        throw std::invalid_argument("Fq: operation on detached element");
    }
    if (a.ctx_->ctx_id() != b.ctx_->ctx_id()) {
        throw std::invalid_argument("Fq: mixed field contexts");
    }
    return *a.ctx_;
}

Fq operator+(const Fq& a, const Fq& b) {
    const FieldCtx& c = Fq::common_ctx(a, b);
    return Fq(a.ctx_, c.add(a.code_, b.code_));
}

Fq operator-(const Fq& a, const Fq& b) {
    const FieldCtx& c = Fq::common_ctx(a, b);
    return Fq(a.ctx_, c.sub(a.code_, b.code_));
}

Fq operator*(const Fq& a, const Fq& b) {
    const FieldCtx& c = Fq::common_ctx(a, b);
    return Fq(a.ctx_, c.mul(a.code_, b.code_));
}

Fq operator/(const Fq& a, const Fq& b) {
    const FieldCtx& c = Fq::common_ctx(a, b);
    return Fq(a.ctx_, c.div(a.code_, b.code_));
}

Fq Fq::operator-() const {
    if (!ctx_) throw std::invalid_argument("Fq: operation on detached element");
    return Fq(ctx_, ctx_->neg(code_));
}

Fq Fq::pow(std::uint64_t e) const {
    if (!ctx_) throw std::invalid_argument("Fq: operation on detached element");
    return Fq(ctx_, ctx_->pow(code_, e));
}

bool operator==(const Fq& a, const Fq& b) {
    Fq::common_ctx(a, b);
    return a.code_ == b.code_;
}

bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

}  // namespace tracecode
