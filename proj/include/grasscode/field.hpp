#pragma once

// Table-driven arithmetic for F_{q^m} over F_q, q = p^e with p prime.
// Elements are stored as integer encodings of their coefficient vector in the
// polynomial basis over F_p (little-endian base-p digits).  The modulus comes
// from the embedded table in field_tables.hpp and always has x as a primitive
// root, so discrete logs, orbit orderings and serialized words are identical
// across runs and platforms.

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "field_tables.hpp"

namespace grasscode {

// Raised for (q, m) combinations outside the embedded modulus table, and for
// parameter sets the decoder construction refuses.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of F_{q^m}.  Wrapping the integer encoding keeps reprs and discrete
// logs from being mixed up silently.
struct Fe {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend constexpr bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend constexpr bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

class Field {
  public:
    static constexpr std::uint64_t kMaxSize = 1ull << 24;

    // q must be a prime power; the prime case is the primary configuration and
    // q = p^e (e > 1) is handled as a tower hidden behind the same interface.
    Field(std::uint32_t q, std::uint32_t m) : q_(q), m_(m) {
        if (q < 2 || m < 1) throw UnsupportedError("field: q >= 2 and m >= 1 required");
        p_ = smallest_prime_factor(q);
        std::uint32_t e = 0;
        std::uint64_t t = 1;
        while (t < q) t *= p_, ++e;
        if (t != q) throw UnsupportedError("field: q = " + std::to_string(q) + " is not a prime power");
        e_ = e;
        n_ = e_ * m_;

        auto mod = lookup_modulus(p_, n_);
        if (!mod) {
            throw UnsupportedError("field: no modulus for p=" + std::to_string(p_) + " degree " +
                                   std::to_string(n_) + " (q^m must stay <= 2^24)");
        }
        modulus_ = *mod;
        size_ = ipow(p_, n_);
        order_ = size_ - 1;

        build_log_tables();
        verify_generator_order();

        frob_mult_.resize(m_ + 1);
        for (std::uint32_t i = 0; i <= m_; ++i) frob_mult_[i] = ipow_mod(q_, i, order_);

        build_subfield_and_basis();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = default;

    std::uint32_t p() const { return p_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t order() const { return order_; }       // q^m - 1
    std::uint64_t modulus() const { return modulus_; }   // integer encoding incl. monic term
    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe gamma() const { return gamma_; }

    Fe element(std::uint64_t repr) const {
        if (repr >= size_) throw std::out_of_range("field: element repr out of range");
        return Fe{static_cast<std::uint32_t>(repr)};
    }

    Fe add(Fe a, Fe b) const {
        if (p_ == 2) return Fe{a.v ^ b.v};
        std::uint32_t r = 0, mult = 1, x = a.v, y = b.v;
        while (x || y) {
            std::uint32_t d = x % p_ + y % p_;
            if (d >= p_) d -= p_;
            r += d * mult;
            x /= p_;
            y /= p_;
            mult *= p_;
        }
        return Fe{r};
    }

    Fe neg(Fe a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, mult = 1, x = a.v;
        while (x) {
            std::uint32_t d = x % p_;
            if (d) d = p_ - d;
            r += d * mult;
            x /= p_;
            mult *= p_;
        }
        return Fe{r};
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (a.v == 0 || b.v == 0) return Fe{0};
        std::uint64_t s = log_[a.v] + log_[b.v];
        if (s >= order_) s -= order_;
        return exp_[s];
    }

    Fe inv(Fe a) const {
        if (a.v == 0) throw std::domain_error("field: division by zero");
        std::uint64_t l = log_[a.v];
        return exp_[l == 0 ? 0 : order_ - l];
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    // gamma^i for any integer i (negative allowed).
    Fe exp(std::int64_t i) const {
        std::int64_t r = i % static_cast<std::int64_t>(order_);
        if (r < 0) r += static_cast<std::int64_t>(order_);
        return exp_[static_cast<std::uint64_t>(r)];
    }

    std::int64_t log(Fe a) const {
        if (a.v == 0) throw std::domain_error("field: log of zero");
        return static_cast<std::int64_t>(log_[a.v]);
    }

    Fe pow(Fe a, std::int64_t k) const {
        if (a.v == 0) {
            if (k > 0) return Fe{0};
            if (k == 0) return Fe{1};
            throw std::domain_error("field: zero to a negative power");
        }
        auto l = static_cast<__int128>(log_[a.v]) * k % static_cast<std::int64_t>(order_);
        auto r = static_cast<std::int64_t>(l);
        if (r < 0) r += static_cast<std::int64_t>(order_);
        return exp_[static_cast<std::uint64_t>(r)];
    }

    // a^{q^i}, the i-th power of the relative Frobenius. 0 <= i <= m.
    Fe frobenius(Fe a, std::uint32_t i) const {
        if (i > m_) throw std::out_of_range("field: frobenius power out of range");
        if (a.v == 0) return a;
        std::uint64_t l = log_[a.v] * frob_mult_[i] % order_;
        return exp_[l];
    }

    // Sum of a^{q^i} for i = 0..m-1; always lands in F_q.
    Fe trace(Fe a) const {
        Fe acc{0};
        for (std::uint32_t i = 0; i < m_; ++i) acc = add(acc, frobenius(a, i));
        return acc;
    }

    bool in_base(Fe a) const { return frobenius(a, 1) == a; }

    // Smallest d >= 1 with d | m and a in F_{q^d}. a must be nonzero.
    std::uint32_t subfield_degree(Fe a) const {
        if (a.v == 0) throw std::domain_error("field: subfield degree of zero");
        for (std::uint32_t d = 1; d <= m_; ++d) {
            if (m_ % d == 0 && frobenius(a, d) == a) return d;
        }
        throw std::logic_error("field: subfield degree not found");  // unreachable
    }

    // Coordinates of a in the fixed F_q-basis (greedy scan of gamma powers; for
    // prime q this is the polynomial basis, so coordinates are just digits).
    std::vector<Fe> fq_coordinates(Fe a) const {
        std::vector<Fe> out(m_);
        if (e_ == 1) {
            std::uint32_t x = a.v;
            for (std::uint32_t i = 0; i < m_; ++i) {
                out[i] = Fe{x % p_};
                x /= p_;
            }
            return out;
        }
        std::vector<std::uint8_t> digits = p_digits(a);
        std::vector<std::uint8_t> c(n_, 0);
        for (std::uint32_t r = 0; r < n_; ++r) {
            std::uint32_t acc = 0;
            for (std::uint32_t cidx = 0; cidx < n_; ++cidx) acc += coord_inv_[r * n_ + cidx] * digits[cidx];
            c[r] = static_cast<std::uint8_t>(acc % p_);
        }
        for (std::uint32_t i = 0; i < m_; ++i) {
            Fe ai{0};
            for (std::uint32_t j = 0; j < e_; ++j) {
                ai = add(ai, mul(Fe{c[i * e_ + j]}, base_basis_[j]));
            }
            out[i] = ai;
        }
        return out;
    }

    Fe from_coordinates(std::span<const Fe> coords) const {
        if (coords.size() != m_) throw std::invalid_argument("field: coordinate vector must have length m");
        if (e_ == 1) {
            std::uint32_t r = 0, mult = 1;
            for (std::uint32_t i = 0; i < m_; ++i) {
                if (coords[i].v >= p_) throw std::invalid_argument("field: coordinate not in F_q");
                r += coords[i].v * mult;
                mult *= p_;
            }
            return Fe{r};
        }
        Fe acc{0};
        for (std::uint32_t i = 0; i < m_; ++i) acc = add(acc, mul(coords[i], ext_basis_[i]));
        return acc;
    }

    const std::vector<Fe>& fq_basis() const { return ext_basis_; }

    // Canonical index of an F_q element in [0, q); inverse of digit_element.
    std::uint32_t digit_of(Fe a) const {
        if (e_ == 1) {
            if (a.v >= p_) throw std::domain_error("field: element not in F_q");
            return a.v;
        }
        auto it = digit_index_.find(a.v);
        if (it == digit_index_.end()) throw std::domain_error("field: element not in F_q");
        return it->second;
    }

    Fe digit_element(std::uint32_t d) const {
        if (d >= q_) throw std::out_of_range("field: digit out of range");
        if (e_ == 1) return Fe{d};
        return digit_elem_[d];
    }

  private:
    static std::uint32_t smallest_prime_factor(std::uint32_t n) {
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return d;
        }
        return n;
    }

    static std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    }

    static std::uint64_t ipow_mod(std::uint64_t b, std::uint32_t e, std::uint64_t mod) {
        std::uint64_t r = 1 % mod;
        b %= mod;
        while (e--) r = r * b % mod;
        return r;
    }

    std::vector<std::uint8_t> p_digits(Fe a) const {
        std::vector<std::uint8_t> d(n_, 0);
        std::uint32_t x = a.v;
        for (std::uint32_t i = 0; i < n_ && x; ++i) {
            d[i] = static_cast<std::uint8_t>(x % p_);
            x /= p_;
        }
        return d;
    }

    void build_log_tables() {
        exp_.resize(order_);
        log_.assign(size_, 0);
        // iterate powers of x with reduction by the monic modulus
        std::vector<std::uint8_t> mod_digits(n_ + 1, 0);
        {
            std::uint64_t x = modulus_;
            for (std::uint32_t i = 0; i <= n_; ++i) {
                mod_digits[i] = static_cast<std::uint8_t>(x % p_);
                x /= p_;
            }
        }
        std::vector<std::uint8_t> cur(n_, 0);
        cur[0] = 1;
        for (std::uint64_t i = 0; i < order_; ++i) {
            std::uint32_t repr = 0, mult = 1;
            for (std::uint32_t d = 0; d < n_; ++d) {
                repr += cur[d] * mult;
                mult *= p_;
            }
            exp_[i] = Fe{repr};
            log_[repr] = i;
            // multiply by x
            std::uint8_t carry = cur[n_ - 1];
            for (std::uint32_t d = n_ - 1; d > 0; --d) cur[d] = cur[d - 1];
            cur[0] = 0;
            if (carry) {
                for (std::uint32_t d = 0; d < n_; ++d) {
                    std::uint32_t t = cur[d] + (p_ - 1u) * carry % p_ * mod_digits[d] % p_;
                    cur[d] = static_cast<std::uint8_t>(t % p_);
                }
            }
        }
        gamma_ = n_ == 1 ? exp_[order_ > 1 ? 1 : 0] : Fe{p_};
    }

    void verify_generator_order() {
        if (exp_[0] != Fe{1}) throw std::logic_error("field: table construction broke identity");
        // exp table has no repeats iff x has full order; factor q^m-1 and check
        std::uint64_t rem = order_;
        for (std::uint64_t f = 2; f * f <= rem; ++f) {
            if (rem % f) continue;
            while (rem % f == 0) rem /= f;
            if (order_ > 1 && exp(static_cast<std::int64_t>(order_ / f)) == Fe{1})
                throw std::logic_error("field: modulus is not primitive");
        }
        if (rem > 1 && order_ > 1 && exp(static_cast<std::int64_t>(order_ / rem)) == Fe{1})
            throw std::logic_error("field: modulus is not primitive");
    }

    // F_p row-echelon tracker used for the greedy basis scans.
    struct PRref {
        std::uint32_t p, n;
        std::vector<std::vector<std::uint8_t>> rows;  // reduced, nonzero, distinct pivots
        std::vector<std::uint32_t> pivots;

        bool contains(std::vector<std::uint8_t> v) const {
            reduce(v);
            for (auto d : v)
                if (d) return false;
            return true;
        }

        // returns false if v was already in the span
        bool insert(std::vector<std::uint8_t> v) {
            reduce(v);
            std::uint32_t piv = n;
            for (std::uint32_t i = 0; i < n; ++i)
                if (v[i]) {
                    piv = i;
                    break;
                }
            if (piv == n) return false;
            std::uint32_t c = v[piv];
            std::uint32_t cinv = inv_mod(c, p);
            for (auto& d : v) d = static_cast<std::uint8_t>(d * cinv % p);
            rows.push_back(std::move(v));
            pivots.push_back(piv);
            return true;
        }

        void reduce(std::vector<std::uint8_t>& v) const {
            for (std::size_t r = 0; r < rows.size(); ++r) {
                std::uint32_t c = v[pivots[r]];
                if (!c) continue;
                for (std::uint32_t i = 0; i < n; ++i)
                    v[i] = static_cast<std::uint8_t>((v[i] + (p - c) * rows[r][i]) % p);
            }
        }

        static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
            std::uint32_t r = 1;
            for (std::uint32_t e = p - 2; e; e >>= 1, a = a * a % p)
                if (e & 1) r = r * a % p;
            return r;
        }
    };

    void build_subfield_and_basis() {
        if (e_ == 1) return;  // polynomial basis, digit maps are identities

        // basis of F_q over F_p from powers of the subfield generator
        Fe gq = exp(static_cast<std::int64_t>(order_ / (q_ - 1)));
        PRref sub{p_, n_, {}, {}};
        base_basis_.clear();
        Fe cur{1};
        while (base_basis_.size() < e_) {
            if (sub.insert(p_digits(cur))) base_basis_.push_back(cur);
            cur = mul(cur, gq);
        }

        // greedy F_q-basis of the big field: keep gamma^t when it is outside the
        // F_q-span of the kept powers (tracked as an F_p span of subfield multiples)
        PRref track{p_, n_, {}, {}};
        ext_basis_.clear();
        std::int64_t t = 0;
        while (ext_basis_.size() < m_) {
            Fe cand = exp(t++);
            if (track.contains(p_digits(cand))) continue;
            ext_basis_.push_back(cand);
            for (std::uint32_t j = 0; j < e_; ++j) track.insert(p_digits(mul(cand, base_basis_[j])));
        }

        // invert the F_p change-of-basis matrix: column i*e+j holds ext_basis_[i]*base_basis_[j]
        std::vector<std::uint8_t> aug(n_ * 2 * n_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            for (std::uint32_t j = 0; j < e_; ++j) {
                auto col = p_digits(mul(ext_basis_[i], base_basis_[j]));
                for (std::uint32_t r = 0; r < n_; ++r) aug[r * 2 * n_ + (i * e_ + j)] = col[r];
            }
        }
        for (std::uint32_t r = 0; r < n_; ++r) aug[r * 2 * n_ + n_ + r] = 1;
        for (std::uint32_t c = 0, row = 0; c < n_ && row < n_; ++c) {
            std::uint32_t sel = row;
            while (sel < n_ && aug[sel * 2 * n_ + c] == 0) ++sel;
            if (sel == n_) throw std::logic_error("field: coordinate basis is singular");
            if (sel != row) {
                for (std::uint32_t k = 0; k < 2 * n_; ++k) std::swap(aug[sel * 2 * n_ + k], aug[row * 2 * n_ + k]);
            }
            std::uint32_t pivinv = PRref::inv_mod(aug[row * 2 * n_ + c], p_);
            for (std::uint32_t k = 0; k < 2 * n_; ++k)
                aug[row * 2 * n_ + k] = static_cast<std::uint8_t>(aug[row * 2 * n_ + k] * pivinv % p_);
            for (std::uint32_t rr = 0; rr < n_; ++rr) {
                if (rr == row) continue;
                std::uint32_t f = aug[rr * 2 * n_ + c];
                if (!f) continue;
                for (std::uint32_t k = 0; k < 2 * n_; ++k)
                    aug[rr * 2 * n_ + k] =
                        static_cast<std::uint8_t>((aug[rr * 2 * n_ + k] + (p_ - f) * aug[row * 2 * n_ + k]) % p_);
            }
            ++row;
        }
        coord_inv_.assign(n_ * n_, 0);
        for (std::uint32_t r = 0; r < n_; ++r)
            for (std::uint32_t c = 0; c < n_; ++c) coord_inv_[r * n_ + c] = aug[r * 2 * n_ + n_ + c];

        // digit <-> element tables for the subfield
        digit_elem_.resize(q_);
        for (std::uint32_t d = 0; d < q_; ++d) {
            Fe el{0};
            std::uint32_t x = d;
            for (std::uint32_t j = 0; j < e_; ++j) {
                el = add(el, mul(Fe{x % p_}, base_basis_[j]));
                x /= p_;
            }
            digit_elem_[d] = el;
            digit_index_[el.v] = d;
        }
    }

    std::uint32_t q_, m_, p_ = 0, e_ = 0, n_ = 0;
    std::uint64_t modulus_ = 0, size_ = 0, order_ = 0;
    Fe gamma_{0};
    std::vector<Fe> exp_;
    std::vector<std::uint64_t> log_;
    std::vector<std::uint64_t> frob_mult_;

    // tower-only data (empty when q is prime)
    std::vector<Fe> base_basis_;  // F_q over F_p
    std::vector<Fe> ext_basis_;   // F_{q^m} over F_q
    std::vector<std::uint8_t> coord_inv_;
    std::vector<Fe> digit_elem_;
    std::unordered_map<std::uint32_t, std::uint32_t> digit_index_;
};

}  // namespace grasscode
