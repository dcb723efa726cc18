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

#include "tracecode/subfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracecode/matrix.hpp"

namespace tracecode {

// ===========================================================================
// Cyclotomic cosets
// ===========================================================================

CosetSystem coset_system(std::uint64_t q, std::uint32_t n,
                         std::uint32_t n_prime) {
    if (n_prime == 0 || n_prime >= n || n % n_prime != 0) {
        throw std::invalid_argument("coset_system: need n' | n and n' < n");
    }
    CosetSystem cs;
    cs.q = q;
    cs.n = n;
    cs.n_prime = n_prime;
    cs.modulus = checked_pow_u64(q, 2 * n, ~std::uint64_t{0}) - 1;
    cs.multiplier = checked_pow_u64(q, 2 * n_prime, cs.modulus);

    std::vector<bool> seen(cs.modulus, false);
    for (std::uint64_t x = 0; x < cs.modulus; ++x) {
        if (seen[x]) continue;  // x's coset was opened by a smaller member
        std::vector<std::uint64_t> coset;
        std::uint64_t y = x;
        do {
            seen[y] = true;
            coset.push_back(y);
            y = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(y) * cs.multiplier) %
                cs.modulus);
        } while (y != x);
        std::sort(coset.begin(), coset.end());
        cs.min_reps.push_back(x);
        cs.cosets.push_back(std::move(coset));
    }
    return cs;
}

std::size_t CosetSystem::coset_index_of(std::uint64_t x) const {
    if (x >= modulus) throw std::invalid_argument("coset_index_of: out of range");
    // Walk to the coset minimum, then binary-search the sorted reps.
    std::uint64_t min_val = x, y = x;
    do {
        y = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(y) * multiplier) % modulus);
        min_val = std::min(min_val, y);
    } while (y != x);
    const auto it = std::lower_bound(min_reps.begin(), min_reps.end(), min_val);
    return static_cast<std::size_t>(it - min_reps.begin());
}

// ===========================================================================
// Bound family
// ===========================================================================

std::int64_t Rational::floor_value() const {
    if (den <= 0) throw std::logic_error("Rational: nonpositive denominator");
    std::int64_t quo = num / den;
    if (num % den != 0 && num < 0) --quo;
    return quo;
}

BoundSet d_bound(std::uint64_t q, std::uint32_t n, std::uint32_t t,
                 std::uint32_t n_prime) {
    if (n == 0 || t == 0 || t > n || n_prime == 0 || n % n_prime != 0) {
        throw std::invalid_argument("d_bound: malformed (q, n, t, n')");
    }
    auto qpow = [&](std::uint32_t e) {
        return static_cast<std::int64_t>(
            checked_pow_u64(q, e, std::uint64_t{1} << 62));
    };
    BoundSet bs;
    bs.a = a_bound(q, n, t);
    bs.b = qpow(n) - static_cast<std::int64_t>(q - 1) * qpow(n - t) -
           static_cast<std::int64_t>(q);
    bs.b1 = qpow(n) - static_cast<std::int64_t>(q - 1) * qpow(n - t) - 2;
    bs.c = Rational{qpow(2 * n - 2) - 1, qpow(n - 2) + 1};

    if (t == 1 && n == 2) {
        bs.d = static_cast<std::int64_t>(q) - 2;
        bs.d_rule = "q-2";
    } else if (t == 1) {
        if (n_prime > 2) {
            bs.d = static_cast<std::int64_t>(bs.a);
            bs.d_rule = "A";
        } else if (n_prime == 2) {
            bs.d = bs.c.floor_value();
            bs.d_rule = "floor(C)";
        } else {
            bs.d = bs.b1;
            bs.d_rule = "B1";
        }
    } else {
        if (n_prime != 1) {
            bs.d = static_cast<std::int64_t>(bs.a);
            bs.d_rule = "A";
        } else if (n % 2 == 0) {
            bs.d = bs.b;
            bs.d_rule = "B";
        } else {
            bs.d = std::min<std::int64_t>(static_cast<std::int64_t>(bs.a), bs.b);
            bs.d_rule = "min(A,B)";
        }
    }
    return bs;
}

std::vector<std::uint64_t> gamma_tau(const CosetSystem& cs, std::uint64_t tau) {
    if (tau >= cs.min_reps.size()) {
        throw std::invalid_argument("gamma_tau: tau out of range");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i <= tau; ++i) {
        out.insert(out.end(), cs.cosets[static_cast<std::size_t>(i)].begin(),
                   cs.cosets[static_cast<std::size_t>(i)].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ===========================================================================
// Subfield decomposition helpers
// ===========================================================================

namespace {

// Decomposes elements of F = GF(p^{big_pdeg}) over the subfield
// S = GF(p^{sub_pdeg}) against the basis {1, g, ..., g^{d-1}}, d the
// relative degree: x = sum_i comp_i g^i with comp_i in S.
class SubfieldSplitter {
public:
    SubfieldSplitter(FieldCtxPtr big, std::uint32_t sub_pdeg)
        : big_(std::move(big)), sub_pdeg_(sub_pdeg) {
        const FieldCtx& f = *big_;
        const std::uint32_t big_pdeg = f.degree();
        if (sub_pdeg_ == 0 || big_pdeg % sub_pdeg_ != 0) {
            throw std::invalid_argument("subfield split: degree divisibility violated");
        }
        d_ = big_pdeg / sub_pdeg_;
        prime_ = FieldCtx::create(f.characteristic(), 1);

        // p-basis of S: powers of the canonical subfield generator.
        const std::uint64_t sub_order =
            checked_pow_u64(f.characteristic(), sub_pdeg_, f.order());
        const std::uint64_t step = f.group_order() / (sub_order - 1);
        std::vector<std::uint32_t> s_basis(sub_pdeg_);
        for (std::uint32_t k = 0; k < sub_pdeg_; ++k) {
            s_basis[k] = f.gpow(step * k);
        }
        basis_.resize(big_pdeg);
        Matrix m(prime_, big_pdeg, big_pdeg);
        for (std::uint32_t i = 0; i < d_; ++i) {
            const std::uint32_t gi = f.gpow(i);
            for (std::uint32_t k = 0; k < sub_pdeg_; ++k) {
                const std::uint32_t elem = f.mul(gi, s_basis[k]);
                const std::uint32_t col = i * sub_pdeg_ + k;
                basis_[col] = elem;
                const std::vector<std::uint32_t> coords = f.coeffs_of(elem);
                for (std::uint32_t r = 0; r < big_pdeg; ++r) {
                    m.set(r, col, coords[r]);
                }
            }
        }
        inv_ = invert(m);
    }

    std::uint32_t relative_degree() const { return d_; }

    // The d components of x, each an element of S embedded in F.
    std::vector<std::uint32_t> split(std::uint32_t x) const {
        const FieldCtx& f = *big_;
        const FieldCtx& gp = *prime_;
        const std::uint32_t big_pdeg = f.degree();
        const std::vector<std::uint32_t> coords = f.coeffs_of(x);
        std::vector<std::uint32_t> comp(d_, 0);
        for (std::uint32_t row = 0; row < big_pdeg; ++row) {
            // c[row] = sum_j inv[row][j] * coords[j] over GF(p).
            std::uint32_t c = 0;
            const std::uint32_t* irow = inv_.row(row);
            for (std::uint32_t j = 0; j < big_pdeg; ++j) {
                c = gp.add(c, gp.mul(irow[j], coords[j]));
            }
            if (c != 0) {
                const std::uint32_t i = row / sub_pdeg_;
                const std::uint32_t k = row % sub_pdeg_;
                // comp_i += c * s_k, with s_k = basis_[i * sub + k] / g^i:
                // basis_ stores g^i s_k, so accumulate c * s_k directly.
                const std::uint32_t sk = basis_[k];  // row i = 0 holds s_k itself
                comp[i] = f.add(comp[i], f.mul(c, sk));
            }
        }
        return comp;
    }

private:
    Matrix invert(const Matrix& m) const {
        const std::size_t nn = m.rows();
        Matrix aug(prime_, nn, 2 * nn);
        for (std::size_t r = 0; r < nn; ++r) {
            for (std::size_t c = 0; c < nn; ++c) aug.set(r, c, m.at(r, c));
            aug.set(r, nn + r, 1);
        }
        if (aug.rref_in_place() != nn) {
            throw std::logic_error("subfield split: basis is not independent");
        }
        Matrix inv(prime_, nn, nn);
        for (std::size_t r = 0; r < nn; ++r) {
            for (std::size_t c = 0; c < nn; ++c) inv.set(r, c, aug.at(r, nn + c));
        }
        return inv;
    }

    FieldCtxPtr big_;
    FieldCtxPtr prime_;
    std::uint32_t sub_pdeg_ = 0;
    std::uint32_t d_ = 0;
    std::vector<std::uint32_t> basis_;  // basis_[i*sub+k] = g^i * s_k
    Matrix inv_;
};

}  // namespace

// ===========================================================================
// Subfield-subcodes
// ===========================================================================

EvalCode subfield_subcode(const EvalCode& code, std::uint32_t n_prime) {
    if (!code.ctx) throw std::invalid_argument("subfield_subcode: unbound code");
    if (n_prime == 0 || code.n % n_prime != 0) {
        throw std::invalid_argument("subfield_subcode: n' must divide n");
    }
    const FieldCtx& f = *code.ctx;
    const std::uint32_t e = f.degree() / (2 * code.n);  // q = p^e
    const std::uint32_t sub_pdeg = 2 * n_prime * e;

    EvalCode out;
    out.ctx = code.ctx;
    out.q = code.q;
    out.n = code.n;
    out.delta = code.delta;
    out.length = code.length;
    out.alphabet_pdeg = sub_pdeg;
    out.provenance = code.provenance;
    out.provenance["construction"] = "subfield_subcode";
    out.provenance["n_prime"] = n_prime;

    // Already subfield-valued: the intersection is the code itself.
    bool already_sub = true;
    for (std::size_t r = 0; r < code.gen.rows() && already_sub; ++r) {
        const std::uint32_t* row = code.gen.row(r);
        for (std::size_t c = 0; c < code.gen.cols(); ++c) {
            if (!f.in_subfield(row[c], sub_pdeg)) {
                already_sub = false;
                break;
            }
        }
    }
    if (already_sub) {
        out.gen = code.gen;
        out.dim = code.dim;
        return out;
    }

    // v in C  <=>  K v = 0 for K spanning the Euclidean dual of C.  With v
    // restricted to S^m, each big-field equation splits into d = n/n'
    // S-linear component equations.
    const Matrix dual = code.gen.kernel_basis();
    const SubfieldSplitter splitter(code.ctx, sub_pdeg);
    const std::uint32_t d = splitter.relative_degree();

    Matrix constraints(code.ctx, dual.rows() * d, code.length);
    for (std::size_t r = 0; r < dual.rows(); ++r) {
        const std::uint32_t* row = dual.row(r);
        for (std::size_t c = 0; c < code.length; ++c) {
            const std::vector<std::uint32_t> comp = splitter.split(row[c]);
            for (std::uint32_t i = 0; i < d; ++i) {
                constraints.set(r * d + i, c, comp[i]);
            }
        }
    }
    // The constraint matrix is S-valued, so Gaussian elimination stays in S
    // and the kernel basis is an S-basis of the subcode.
    out.gen = constraints.kernel_basis();
    out.dim = out.gen.rank();
    return out;
}

EvalCode gamma_tau_code(const TraceDepPoly& poly, const CosetSystem& cs,
                        std::uint64_t tau) {
    const std::vector<std::uint64_t> gamma = gamma_tau(cs, tau);
    EvalCode big = build_eval_code(poly, gamma);
    EvalCode sub = subfield_subcode(big, cs.n_prime);

    sub.provenance["construction"] = "gamma_tau_subcode";
    sub.provenance["tau"] = tau;
    std::uint64_t size_sum = 0;
    for (std::uint64_t i = 0; i <= tau; ++i) {
        size_sum += cs.cosets[static_cast<std::size_t>(i)].size();
    }
    sub.provenance["coset_size_sum"] = size_sum;
    // Remark remdim situation: the defining polynomial's support contained
    // in Gamma(tau) lowers the dimension bound by one.
    bool support_inside = true;
    for (const TraceMonomial& mono : poly.support) {
        if (!std::binary_search(gamma.begin(), gamma.end(),
                                mono.exponent % cs.modulus)) {
            support_inside = false;
            break;
        }
    }
    sub.provenance["trace_support_in_gamma"] = support_inside;
    if (tau + 1 < cs.min_reps.size()) {
        sub.dual_distance_bound = cs.min_reps[static_cast<std::size_t>(tau) + 1] + 1;
    }
    return sub;
}

std::size_t delsarte_subcode_dim(const EvalCode& code, std::uint32_t n_prime) {
    if (!code.ctx) throw std::invalid_argument("delsarte: unbound code");
    if (n_prime == 0 || code.n % n_prime != 0) {
        throw std::invalid_argument("delsarte: n' must divide n");
    }
    const FieldCtx& f = *code.ctx;
    const std::uint32_t e = f.degree() / (2 * code.n);
    const std::uint32_t sub_pdeg = 2 * n_prime * e;
    const std::uint32_t big_pdeg = f.degree();
    const std::uint32_t d = big_pdeg / sub_pdeg;

    // Tr(C^perp) over S: S-span of the coordinatewise traces of alpha * v,
    // v running over a dual basis and alpha over an S-basis of F.
    const Matrix dual = code.gen.kernel_basis();
    Matrix traced(code.ctx, dual.rows() * d, code.length);
    for (std::size_t r = 0; r < dual.rows(); ++r) {
        const std::uint32_t* row = dual.row(r);
        for (std::uint32_t i = 0; i < d; ++i) {
            const std::uint32_t alpha = f.gpow(i);
            for (std::size_t c = 0; c < code.length; ++c) {
                traced.set(r * d + i, c,
                           f.trace_map(f.mul(alpha, row[c]), big_pdeg, sub_pdeg));
            }
        }
    }
    return code.length - traced.rank();
}

}  // namespace tracecode
