#ifndef DRWITT_DRW_HPP
#define DRWITT_DRW_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "drwitt/witt.hpp"

namespace drwitt {

// A normal-form term of the truncated de Rham-Witt complex of F_p[x_1..x_d]:
//
//   c * V^u[x^body] * dV^u[x^full] ^ dV^u[x_{i1}] ^ ... ^ dV^u[x_{iq}]
//
// All factors of one term sit at a single depth u (the denominator exponent of
// the term's weight). `body` may be zero only when u = 0 or a wedge is present.
// `full` is a non-unit exponent vector carried by at most one wedge factor and
// only when there is no body; unit-vector wedge factors live in the bitmask
// `bares`. At u = 0 wedge factors are the classical d[x_i] and `full` is unused.
//
// Coefficients are carried uniformly mod p^N on generators of depth < N, i.e.
// the module is the depth-truncated shadow of the full complex with p^N-torsion
// coefficients; multiplying a generator by p keeps it at its depth instead of
// sinking it one level. Normality additionally requires, at u >= 1 with weight
// vector w = body + full + sum(bares):
//   * p does not divide gcd(body), gcd(full) (depth minimality),
//   * the F-image test fails: not all wedge exponents are -1 mod p with the
//     remaining ones 0 mod p,
//   * the leading relation sum_i w_i V^u[x^(w-e_i)] dV^u[x_i] = p^u dV^u[x^w]
//     cannot eliminate the term (minimal eligible index rule).
struct DrwKey {
    uint8_t depth = 0;
    Mono body{};
    Mono full{};
    uint8_t bares = 0;

    uint32_t wedge_count() const;
    uint32_t degree() const { return wedge_count(); }
    bool has_full() const { return !full.is_one(); }
    // weight numerator: body + full + sum of bare unit vectors
    Mono weight_num(uint32_t nvars) const;
    bool operator<(const DrwKey& o) const;
    bool operator==(const DrwKey& o) const;
};

// Graded sum of normal-form terms with coefficients in Z/p^N.
class DrwForm {
  public:
    DrwForm() = default;
    DrwForm(uint64_t p, uint32_t m, uint32_t N, uint32_t nvars, uint32_t degree);

    static DrwForm teichmuller(uint64_t p, uint32_t m, uint32_t N, const MPoly& f);
    // expansion of a full Witt vector through its Teichmuller digits
    static DrwForm from_witt(const WittVector& w, uint32_t m);

    uint64_t p() const { return p_; }
    uint32_t prec() const { return m_; }
    uint32_t N() const { return N_; }
    uint32_t nvars() const { return nv_; }
    uint32_t degree() const { return q_; }
    uint64_t modulus() const { return upow(p_, m_); }
    bool is_zero() const { return t_.empty(); }
    const std::map<DrwKey, uint64_t>& terms() const { return t_; }

    void add_term(const DrwKey& k, uint64_t c);
    DrwForm add(const DrwForm& o) const;
    DrwForm sub(const DrwForm& o) const;
    DrwForm scale(uint64_t c) const;
    DrwForm neg() const { return scale(modulus() - 1); }
    DrwForm mul(const DrwForm& o) const;
    DrwForm d() const;
    DrwForm V() const;
    DrwForm F() const;

    DrwForm with_prec(uint32_t m2) const;
    uint32_t min_coeff_val() const;
    DrwForm div_pow_p(uint32_t j) const;

    // (integral part, fractional part): depth 0 versus depth >= 1
    std::pair<DrwForm, DrwForm> split_integral_fractional() const;
    // true if every term's weight has total value <= cap
    bool weight_within(uint32_t cap) const;

    bool operator==(const DrwForm& o) const;
    std::string str() const;

  private:
    uint64_t p_ = 3;
    uint32_t m_ = 1, N_ = 1, nv_ = 1, q_ = 0;
    std::map<DrwKey, uint64_t> t_;
};

// One normalized generator product; the workhorse behind every operation.
// `factors` are (is_diff, depth, exponent) triples in the written order.
struct RawFactor {
    bool diff;
    uint32_t depth;
    Mono expo;
};
DrwForm normalize_product(uint64_t p, uint32_t m, uint32_t N, uint32_t nvars, uint64_t coeff,
                          std::vector<RawFactor> factors);

// Formal expression over generators, for the rewriting entry point and its
// confluence tests.
struct DrwExpr {
    enum Kind { GEN, CONST, SUM, PROD, DOP, VOP, FOP } kind = CONST;
    uint64_t cval = 0;            // CONST
    RawFactor gen{};              // GEN
    std::vector<DrwExpr> args;    // SUM, PROD, or single arg for DOP/VOP/FOP

    static DrwExpr constant(uint64_t c);
    static DrwExpr generator(bool diff, uint32_t depth, Mono e);
    static DrwExpr sum(std::vector<DrwExpr> xs);
    static DrwExpr prod(std::vector<DrwExpr> xs);
    static DrwExpr apply(Kind op, DrwExpr x);
};

// strategy 0: left-to-right folding; strategy 1: right-to-left with sums
// distributed before multiplying. Both funnel into normalize_product.
DrwForm drw_normalize(const DrwExpr& e, uint64_t p, uint32_t m, uint32_t N, uint32_t nvars,
                      int strategy = 0);

// text grammar: "V^1[x^2]", "dV^1[x*y^2]", "d[x]", integers, products with *
// or the middle dot, sums with + and -, and prefix d(...), V(...), F(...).
DrwExpr parse_drw_expr(const std::string& text, uint32_t nvars);

// Connection given by an r x r matrix of degree-1 forms.
class DrwConnection {
  public:
    DrwConnection() = default;
    DrwConnection(const Params& par, uint32_t rank);

    const Params& params() const { return par_; }
    uint32_t rank() const { return r_; }
    DrwForm& entry(uint32_t i, uint32_t j) { return m_[i * r_ + j]; }
    const DrwForm& entry(uint32_t i, uint32_t j) const { return m_[i * r_ + j]; }

    std::vector<DrwForm> apply(const std::vector<WittVector>& s) const;
    std::vector<DrwForm> apply_forms(const std::vector<DrwForm>& s) const;
    std::vector<DrwForm> curvature() const;
    bool is_integrable() const;

  private:
    Params par_;
    uint32_t r_ = 1;
    std::vector<DrwForm> m_;
};

}  // namespace drwitt

#endif
