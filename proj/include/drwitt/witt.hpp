#ifndef DRWITT_WITT_HPP
#define DRWITT_WITT_HPP

#include <memory>
#include <vector>

#include "drwitt/mpoly.hpp"

namespace drwitt {

// Universal sum/product polynomials S_n, P_n in Z[X_0..X_n, Y_0..Y_n], computed by
// recursive ghost-equation solving and stored modulo p^(2N+1). Construction asserts
// the ghost identities ghost_m(S) = ghost_m(X)+ghost_m(Y) and ghost_m(P) =
// ghost_m(X)*ghost_m(Y) at that precision. Variable layout: X_i at index i,
// Y_i at index N+i.
class WittUniversal {
  public:
    WittUniversal(uint64_t p, uint32_t N);

    uint64_t p() const { return p_; }
    uint32_t N() const { return N_; }
    uint32_t work_prec() const { return wm_; }
    const MPoly& sum(uint32_t n) const { return S_.at(n); }
    const MPoly& prod(uint32_t n) const { return P_.at(n); }

    // Process-wide memo keyed by (p, N). Concurrent lookups are safe; inserts of
    // the same key are idempotent.
    static std::shared_ptr<const WittUniversal> get(uint64_t p, uint32_t N);

  private:
    uint64_t p_;
    uint32_t N_;
    uint32_t wm_;
    std::vector<MPoly> S_, P_;
};

struct GrowthProfile {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // (n, deg a_n) for nonzero a_n
    uint32_t cstar_num = 0;                            // C* = max deg(a_n)/(n+1), reduced
    uint32_t cstar_den = 1;
};

// Element of W_N(F_p[x_1..x_d]): exactly N components, reduced mod p.
class WittVector {
  public:
    WittVector() = default;
    WittVector(uint64_t p, uint32_t N, uint32_t nvars);

    static WittVector teichmuller(uint64_t p, uint32_t N, const MPoly& f);
    static WittVector from_components(uint64_t p, uint32_t N, std::vector<MPoly> comps);
    // The image of the p-adic integer c under Z_p = W(F_p) -> W(F_p[x..]).
    static WittVector from_scalar(uint64_t p, uint32_t N, uint32_t nvars, uint64_t c);

    uint64_t p() const { return p_; }
    uint32_t N() const { return N_; }
    uint32_t nvars() const { return nv_; }
    const MPoly& comp(uint32_t n) const { return c_.at(n); }
    const std::vector<MPoly>& comps() const { return c_; }
    bool is_zero() const;

    WittVector add(const WittVector& o) const;
    WittVector mul(const WittVector& o) const;
    WittVector neg() const;  // p odd: componentwise negation
    WittVector sub(const WittVector& o) const { return add(o.neg()); }

    WittVector V() const;                    // (0, a_0, .., a_{N-2})
    WittVector F() const;                    // length N-1; componentwise p-th power
    WittVector mul_p() const;                // p*a = V(F(a)) padded back to length N
    WittVector scalar_mul(uint64_t c) const; // c in Z/p^N acting through W(F_p)

    GrowthProfile growth_profile() const;

    // Ghost components of the canonical lift, at precision m.
    std::vector<MPoly> ghost(uint32_t m) const;

    bool operator==(const WittVector& o) const { return c_ == o.c_; }

  private:
    void check(const WittVector& o) const;

    uint64_t p_ = 3;
    uint32_t N_ = 1;
    uint32_t nv_ = 1;
    std::vector<MPoly> c_;
};

// Ghost components of explicitly lifted components (all at the lift's precision):
// w_n = sum_{i<=n} p^i a_i^(p^(n-i)).
std::vector<MPoly> ghost_of_lift(const std::vector<MPoly>& lifted);

// Canonical lift of an F_p polynomial: same residues at precision m.
inline MPoly canonical_lift(const MPoly& f, uint32_t m) { return f.with_prec(m); }

}  // namespace drwitt

#endif
