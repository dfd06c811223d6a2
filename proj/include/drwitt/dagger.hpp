#ifndef DRWITT_DAGGER_HPP
#define DRWITT_DAGGER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "drwitt/mpoly.hpp"
#include "drwitt/params.hpp"

namespace drwitt {

// Element of W(k)<x_1..x_d>^dagger at finite truncation: a polynomial mod p^N,
// viewed as layers a = sum_k p^k f_k with the f_k the coefficientwise p-ary
// digit slices. The layer view backs the overconvergence certificate; the
// arithmetic itself is exact mod p^N.
class DaggerSeries {
  public:
    DaggerSeries() = default;
    DaggerSeries(uint64_t p, uint32_t N, uint32_t nvars) : v_(p, N, nvars) {}
    explicit DaggerSeries(MPoly v) : v_(std::move(v)) {}

    static DaggerSeries from_layers(uint64_t p, uint32_t N, const std::vector<MPoly>& layers);

    uint64_t p() const { return v_.p(); }
    uint32_t N() const { return v_.prec(); }
    uint32_t nvars() const { return v_.nvars(); }
    const MPoly& poly() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    DaggerSeries add(const DaggerSeries& o) const { return DaggerSeries(v_ + o.v_); }
    DaggerSeries sub(const DaggerSeries& o) const { return DaggerSeries(v_ - o.v_); }
    DaggerSeries mul(const DaggerSeries& o) const { return DaggerSeries(v_ * o.v_); }

    // Digit slice k, reduced mod p. Layers k >= N are absent by truncation.
    MPoly layer(uint32_t k) const;
    std::vector<MPoly> layers() const;

    // Davis growth criterion at finite truncation: deg f_k <= C (k+1) for all
    // stored layers, C = cnum/cden.
    bool check_overconvergent(uint64_t cnum, uint64_t cden = 1) const;
    // smallest certificate value realized by the layers, as a rational
    std::pair<uint32_t, uint32_t> min_certificate() const;

    bool operator==(const DaggerSeries& o) const { return v_ == o.v_; }

  private:
    MPoly v_;
};

// Frobenius lift determined by the images F(x_i), each required to reduce to
// x_i^p mod p. Images are carried at reserve precision so ghost equations
// downstream stay exact mod p^N.
class FrobeniusLift {
  public:
    FrobeniusLift() = default;
    FrobeniusLift(const Params& par, std::vector<MPoly> images);

    uint64_t p() const { return par_.p; }
    const Params& params() const { return par_; }
    uint32_t work_prec() const { return images_[0].prec(); }
    const std::vector<MPoly>& images() const { return images_; }

    // n-fold composite image of b under the lift, at the working precision of b.
    MPoly iterate(const MPoly& b, uint32_t n) const;

    DaggerSeries apply(const DaggerSeries& a) const;

    bool operator==(const FrobeniusLift& o) const { return images_ == o.images_; }

  private:
    Params par_;
    std::vector<MPoly> images_;
};

// q-form over the dagger algebra: coefficients indexed by sorted index sets,
// stored as bitmasks over the d variables.
class MwForm {
  public:
    MwForm() = default;
    MwForm(uint64_t p, uint32_t N, uint32_t nvars, uint32_t degree)
        : p_(p), N_(N), nv_(nvars), q_(degree) {}

    static MwForm scalar(const MPoly& f);  // degree 0
    static MwForm monomial_form(const MPoly& f, uint8_t mask);

    uint64_t p() const { return p_; }
    uint32_t N() const { return N_; }
    uint32_t nvars() const { return nv_; }
    uint32_t degree() const { return q_; }
    bool is_zero() const;

    const std::map<uint8_t, MPoly>& coeffs() const { return c_; }
    MPoly coeff(uint8_t mask) const;
    void add_coeff(uint8_t mask, const MPoly& f);

    MwForm add(const MwForm& o) const;
    MwForm sub(const MwForm& o) const;
    MwForm scale(const MPoly& f) const;
    MwForm wedge(const MwForm& o) const;
    MwForm d() const;

    bool operator==(const MwForm& o) const;
    std::string str() const;

  private:
    uint64_t p_ = 3;
    uint32_t N_ = 1, nv_ = 1, q_ = 0;
    std::map<uint8_t, MPoly> c_;
};

// Connection matrix on a free module of rank r: entries are degree-1 forms.
class MwConnection {
  public:
    MwConnection() = default;
    MwConnection(const Params& par, uint32_t rank);

    const Params& params() const { return par_; }
    uint32_t rank() const { return r_; }
    MwForm& entry(uint32_t i, uint32_t j) { return m_[i * r_ + j]; }
    const MwForm& entry(uint32_t i, uint32_t j) const { return m_[i * r_ + j]; }

    // (nabla s)_i = d(s_i) + sum_j M_ij s_j
    std::vector<MwForm> apply(const std::vector<DaggerSeries>& s) const;
    // dM + M ^ M, entrywise degree 2
    std::vector<MwForm> curvature() const;
    bool is_integrable() const;

  private:
    Params par_;
    uint32_t r_ = 1;
    std::vector<MwForm> m_;
};

// sign of inserting index i into the sorted set `mask`; 0 if already present
int insertion_sign(uint8_t mask, unsigned i);
// sign of merging two disjoint sorted sets; 0 if they intersect
int merge_sign(uint8_t a, uint8_t b);

}  // namespace drwitt

#endif
