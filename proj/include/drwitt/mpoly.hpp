#ifndef DRWITT_MPOLY_HPP
#define DRWITT_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drwitt/padic.hpp"
#include "drwitt/params.hpp"

namespace drwitt {

// Exponent vector. Capacity covers both the algebra variables (d <= 3) and the
// internal variables of the universal Witt polynomials (X_0..X_n, Y_0..Y_n, n < 5).
constexpr unsigned kMaxVars = 12;

struct Mono {
    std::array<uint32_t, kMaxVars> e{};

    uint32_t deg() const {
        uint32_t s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    Mono operator+(const Mono& o) const {
        Mono r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    // Graded lex: by total degree, then lexicographically.
    bool operator<(const Mono& o) const {
        uint32_t a = deg(), b = o.deg();
        if (a != b) return a < b;
        return e < o.e;
    }
    static Mono var(unsigned i, uint32_t k = 1) {
        Mono m;
        m.e[i] = k;
        return m;
    }
    Mono scaled(uint32_t c) const {
        Mono r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = e[i] * c;
        return r;
    }
};

// Sparse polynomial over Z/p^m with uniform coefficient precision m.
// Zero coefficients are never stored; the term map is graded-lex ordered,
// which makes serialization canonical.
class MPoly {
  public:
    MPoly() = default;
    MPoly(uint64_t p, uint32_t m, uint32_t nvars) : p_(p), m_(m), nv_(nvars) {}

    static MPoly constant(uint64_t p, uint32_t m, uint32_t nvars, int64_t c) {
        MPoly f(p, m, nvars);
        f.add_term(Mono{}, PadicInt(p, m, c).residue());
        return f;
    }
    static MPoly variable(uint64_t p, uint32_t m, uint32_t nvars, unsigned i, uint32_t k = 1) {
        MPoly f(p, m, nvars);
        f.add_term(Mono::var(i, k), 1);
        return f;
    }
    static MPoly monomial(uint64_t p, uint32_t m, uint32_t nvars, const Mono& mo, uint64_t c) {
        MPoly f(p, m, nvars);
        f.add_term(mo, c);
        return f;
    }

    uint64_t p() const { return p_; }
    uint32_t prec() const { return m_; }
    uint32_t nvars() const { return nv_; }
    uint64_t modulus() const { return upow(p_, m_); }
    const std::map<Mono, uint64_t>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }

    uint32_t degree() const {
        uint32_t dmax = 0;
        for (auto& [mo, c] : t_) dmax = std::max(dmax, mo.deg());
        return dmax;
    }

    uint64_t coeff(const Mono& mo) const {
        auto it = t_.find(mo);
        return it == t_.end() ? 0 : it->second;
    }

    void add_term(const Mono& mo, uint64_t c) {
        c %= modulus();
        if (c == 0) return;
        auto [it, fresh] = t_.try_emplace(mo, c);
        if (!fresh) {
            it->second = (it->second + c) % modulus();
            if (it->second == 0) t_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        for (auto& [mo, c] : o.t_) r.add_term(mo, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        uint64_t pm = modulus();
        for (auto& [mo, c] : o.t_) r.add_term(mo, pm - c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        check(o);
        MPoly r(p_, m_, nv_);
        uint64_t pm = modulus();
        for (auto& [ma, ca] : t_)
            for (auto& [mb, cb] : o.t_) r.add_term(ma + mb, mulmod(ca, cb, pm));
        return r;
    }
    MPoly scale(uint64_t c) const {
        MPoly r(p_, m_, nv_);
        uint64_t pm = modulus();
        c %= pm;
        for (auto& [mo, cc] : t_) r.add_term(mo, mulmod(cc, c, pm));
        return r;
    }
    MPoly neg() const { return scale(modulus() - 1); }

    MPoly pow(uint32_t k) const {
        MPoly r = constant(p_, m_, nv_, 1);
        MPoly b = *this;
        while (k) {
            if (k & 1) r = r * b;
            if (k >>= 1) b = b * b;
        }
        return r;
    }

    // f(images): each variable i is replaced by images[i].
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() < nv_) throw RingMismatch("substitute: not enough images");
        for (auto& g : images)
            if (g.p_ != p_ || g.m_ != m_) throw RingMismatch("substitute: coefficient ring mismatch");
        uint32_t rn = images.empty() ? nv_ : images[0].nv_;
        MPoly r(p_, m_, rn);
        // Cache powers of each image.
        std::vector<std::vector<MPoly>> pw(nv_);
        for (auto& [mo, c] : t_) {
            MPoly term = constant(p_, m_, rn, 0);
            term.add_term(Mono{}, c);
            for (unsigned i = 0; i < nv_; ++i) {
                uint32_t k = mo.e[i];
                if (!k) continue;
                auto& cache = pw[i];
                if (cache.empty()) cache.push_back(images[i]);
                while (cache.size() < k) cache.push_back(cache.back() * images[i]);
                term = term * cache[k - 1];
            }
            r = r + term;
        }
        return r;
    }

    MPoly derivative(unsigned i) const {
        MPoly r(p_, m_, nv_);
        uint64_t pm = modulus();
        for (auto& [mo, c] : t_) {
            if (mo.e[i] == 0) continue;
            Mono m2 = mo;
            m2.e[i] -= 1;
            r.add_term(m2, mulmod(c, mo.e[i] % pm, pm));
        }
        return r;
    }

    // Change of working precision. Raising keeps the canonical residue.
    MPoly with_prec(uint32_t m2) const {
        MPoly r(p_, m2, nv_);
        uint64_t pm2 = upow(p_, m2);
        for (auto& [mo, c] : t_) r.add_term(mo, c % pm2);
        return r;
    }

    MPoly frobenius_exponents(uint32_t k = 1) const {
        // x^a -> x^(p^k a) on monomials, coefficients untouched.
        MPoly r(p_, m_, nv_);
        uint32_t q = 1;
        for (uint32_t i = 0; i < k; ++i) q *= (uint32_t)p_;
        for (auto& [mo, c] : t_) r.add_term(mo.scaled(q), c);
        return r;
    }

    // Exact division by p^j on every coefficient; throws if any coefficient resists.
    MPoly div_pow_p(uint32_t j) const {
        if (j == 0) return *this;
        if (m_ <= j) throw PrecisionExhausted("poly division by p^" + std::to_string(j));
        uint64_t pj = upow(p_, j);
        MPoly r(p_, m_ - j, nv_);
        for (auto& [mo, c] : t_) {
            if (c % pj != 0) throw NotDivisible("coefficient " + std::to_string(c) + " by p^" + std::to_string(j));
            r.add_term(mo, c / pj);
        }
        return r;
    }

    uint32_t min_coeff_val() const {
        // Smallest p-valuation over coefficients; m_ for the zero polynomial.
        uint32_t v = m_;
        for (auto& [mo, c] : t_) v = std::min(v, val_p(c, p_, m_));
        return v;
    }

    bool operator==(const MPoly& o) const { return p_ == o.p_ && m_ == o.m_ && t_ == o.t_; }

    std::string str(bool with_mod = false) const;

  private:
    void check(const MPoly& o) const {
        if (p_ != o.p_ || m_ != o.m_ || nv_ != o.nv_) throw RingMismatch("poly ring mismatch");
    }

    uint64_t p_ = 3;
    uint32_t m_ = 1;
    uint32_t nv_ = 1;
    std::map<Mono, uint64_t> t_;
};

std::string mono_str(const Mono& m, uint32_t nvars);

// Parses "2*x^2*y + 1", optionally with a trailing "(mod 3^2)" which is checked
// against the expected ring. Variables: x, y, z (or x0,x1,... for internals).
MPoly parse_poly(const std::string& text, uint64_t p, uint32_t m, uint32_t nvars);

}  // namespace drwitt

#endif
