#ifndef DRWITT_PADIC_HPP
#define DRWITT_PADIC_HPP

#include <cstdint>
#include <string>

#include "drwitt/params.hpp"

namespace drwitt {

// p^e as u64. The working moduli here stay far below 2^63 (p <= 7, e <= 40 or so);
// overflow throws instead of wrapping.
inline uint64_t upow(uint64_t p, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) throw std::overflow_error("upow: p^e exceeds 64 bits");
        r *= p;
    }
    return r;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline uint32_t val_p(uint64_t x, uint64_t p, uint32_t cap) {
    if (x == 0) return cap;
    uint32_t v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Inverse of a unit mod p^m by lifting the mod-p inverse (Newton step doubles digits).
inline uint64_t inv_unit_mod(uint64_t a, uint64_t p, uint32_t m) {
    uint64_t pm = upow(p, m);
    a %= pm;
    if (a % p == 0) throw NotAUnit("inverse of " + std::to_string(a) + " mod " + std::to_string(p) + "^" + std::to_string(m));
    uint64_t x = powmod(a % p, p - 2, p);
    uint32_t prec = 1;
    while (prec < m) {
        prec *= 2;
        uint64_t mod = prec >= m ? pm : upow(p, prec);
        x = mulmod(x, (2 + mod - mulmod(a % mod, x % mod, mod)) % mod, mod);
    }
    return x % pm;
}

// An integer known modulo p^m, with the precision m tracked explicitly.
// A precision-0 value carries no information and compares equal to everything.
class PadicInt {
  public:
    PadicInt() = default;
    PadicInt(uint64_t p, uint32_t prec, int64_t value) : p_(p), prec_(prec) {
        uint64_t pm = upow(p, prec);
        int64_t r = value % (int64_t)pm;
        if (r < 0) r += (int64_t)pm;
        res_ = (uint64_t)r;
    }

    uint64_t p() const { return p_; }
    uint32_t precision() const { return prec_; }
    uint64_t residue() const { return res_; }
    uint64_t modulus() const { return upow(p_, prec_); }

    bool is_zero() const { return res_ == 0; }

    uint32_t valuation() const { return val_p(res_, p_, prec_); }

    PadicInt reduced(uint32_t m) const {
        if (m >= prec_) return *this;
        return PadicInt(p_, m, (int64_t)(res_ % upow(p_, m)));
    }

    PadicInt add(const PadicInt& o) const { return combine(o, +1); }
    PadicInt sub(const PadicInt& o) const { return combine(o, -1); }

    PadicInt mul(const PadicInt& o) const {
        check(o);
        uint32_t m = prec_ < o.prec_ ? prec_ : o.prec_;
        if (m == 0) return PadicInt(p_, 0, 0);
        uint64_t pm = upow(p_, m);
        return from_res(p_, m, mulmod(res_ % pm, o.res_ % pm, pm));
    }

    // a / p^j, precision drops by j. The residue must carry valuation >= j.
    PadicInt div_pow_p(uint32_t j) const {
        if (j == 0) return *this;
        if (prec_ <= j)
            throw PrecisionExhausted("divide by p^" + std::to_string(j) + " at precision " + std::to_string(prec_));
        uint64_t pj = upow(p_, j);
        if (res_ % pj != 0)
            throw NotDivisible(std::to_string(res_) + " by p^" + std::to_string(j));
        return from_res(p_, prec_ - j, (res_ / pj) % upow(p_, prec_ - j));
    }

    PadicInt invert() const {
        if (prec_ == 0) return *this;
        return from_res(p_, prec_, inv_unit_mod(res_, p_, prec_));
    }

    // Equality at the shared known precision; precision 0 matches anything.
    bool congruent(const PadicInt& o) const {
        check(o);
        uint32_t m = prec_ < o.prec_ ? prec_ : o.prec_;
        if (m == 0) return true;
        uint64_t pm = upow(p_, m);
        return res_ % pm == o.res_ % pm;
    }

    std::string str() const {
        return std::to_string(res_) + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
    }

    static PadicInt from_res(uint64_t p, uint32_t prec, uint64_t res) {
        PadicInt x;
        x.p_ = p;
        x.prec_ = prec;
        x.res_ = res % upow(p, prec);
        return x;
    }

  private:
    void check(const PadicInt& o) const {
        if (p_ != o.p_) throw RingMismatch("p mismatch in scalar op");
    }
    PadicInt combine(const PadicInt& o, int sign) const {
        check(o);
        uint32_t m = prec_ < o.prec_ ? prec_ : o.prec_;
        if (m == 0) return PadicInt(p_, 0, 0);
        uint64_t pm = upow(p_, m);
        uint64_t b = o.res_ % pm;
        uint64_t r = sign > 0 ? (res_ % pm + b) % pm : (res_ % pm + pm - b) % pm;
        return from_res(p_, m, r);
    }

    uint64_t p_ = 3;
    uint32_t prec_ = 0;
    uint64_t res_ = 0;
};

// Teichmuller representative of c mod p in Z/p^m: the limit of c^(p^k).
inline uint64_t teichmuller_rep(uint64_t c, uint64_t p, uint32_t m) {
    uint64_t pm = upow(p, m);
    uint64_t t = c % p;
    for (uint32_t k = 0; k + 1 < m; ++k) t = powmod(t, p, pm);
    return t;
}

}  // namespace drwitt

#endif
