#include "drwitt/witt.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace drwitt {

namespace {

// ghost_n over 2N internal variables, applied to a vector of polynomials.
MPoly ghost_n_of(const std::vector<MPoly>& a, uint32_t n, uint64_t p, uint32_t m) {
    MPoly g(p, m, a[0].nvars());
    uint64_t pm = upow(p, m);
    uint64_t pi = 1;
    for (uint32_t i = 0; i <= n; ++i) {
        uint32_t e = 1;
        for (uint32_t k = 0; k < n - i; ++k) e *= (uint32_t)p;
        g = g + a[i].pow(e).scale(pi % pm);
        if (i < n) pi *= p;
    }
    return g;
}

}  // namespace

WittUniversal::WittUniversal(uint64_t p, uint32_t N) : p_(p), N_(N) {
    if (N > 5) throw DepthExceeded("universal Witt polynomials guarded at N <= 5");
    wm_ = 2 * N + 1;
    uint32_t nv = 2 * N;
    std::vector<MPoly> X, Y;
    for (uint32_t i = 0; i < N; ++i) X.push_back(MPoly::variable(p, wm_, nv, i));
    for (uint32_t i = 0; i < N; ++i) Y.push_back(MPoly::variable(p, wm_, nv, N + i));

    for (uint32_t n = 0; n < N; ++n) {
        MPoly gs = ghost_n_of(X, n, p, wm_) + ghost_n_of(Y, n, p, wm_);
        MPoly gp = ghost_n_of(X, n, p, wm_) * ghost_n_of(Y, n, p, wm_);
        // Solve ghost_n(S_0..S_n) = gs for S_n, same for P_n. Divisions are exact;
        // div_pow_p throws if integrality ever fails.
        uint64_t pn = upow(p, n);
        MPoly accS(p, wm_, nv), accP(p, wm_, nv);
        uint64_t pi = 1;
        for (uint32_t i = 0; i < n; ++i) {
            uint32_t e = 1;
            for (uint32_t k = 0; k < n - i; ++k) e *= (uint32_t)p;
            accS = accS + S_[i].pow(e).scale(pi);
            accP = accP + P_[i].pow(e).scale(pi);
            pi *= p;
        }
        // with_prec after division re-raises; residues above p^(wm-n) are not
        // trusted, which is why wm_ carries 2N+1 digits.
        S_.push_back((gs - accS).div_pow_p(n).with_prec(wm_));
        P_.push_back((gp - accP).div_pow_p(n).with_prec(wm_));
        // Verify the defining ghost identity at the precision that survived.
        MPoly checkS = accS + S_.back().scale(pn);
        MPoly checkP = accP + P_.back().scale(pn);
        if (!((checkS - gs).with_prec(wm_ - n).is_zero()))
            throw NotDivisible("universal S ghost identity failed at level " + std::to_string(n));
        if (!((checkP - gp).with_prec(wm_ - n).is_zero()))
            throw NotDivisible("universal P ghost identity failed at level " + std::to_string(n));
    }
}

std::shared_ptr<const WittUniversal> WittUniversal::get(uint64_t p, uint32_t N) {
    static std::shared_mutex mx;
    static std::map<std::pair<uint64_t, uint32_t>, std::shared_ptr<const WittUniversal>> cache;
    {
        std::shared_lock lk(mx);
        auto it = cache.find({p, N});
        if (it != cache.end()) return it->second;
    }
    auto fresh = std::make_shared<const WittUniversal>(p, N);
    std::unique_lock lk(mx);
    auto [it, inserted] = cache.try_emplace({p, N}, fresh);
    return it->second;
}

WittVector::WittVector(uint64_t p, uint32_t N, uint32_t nvars) : p_(p), N_(N), nv_(nvars) {
    c_.assign(N, MPoly(p, 1, nvars));
}

WittVector WittVector::teichmuller(uint64_t p, uint32_t N, const MPoly& f) {
    WittVector w(p, N, f.nvars());
    w.c_[0] = f.with_prec(1);
    return w;
}

WittVector WittVector::from_components(uint64_t p, uint32_t N, std::vector<MPoly> comps) {
    if (comps.size() != N) throw RingMismatch("component count != N");
    WittVector w(p, N, comps[0].nvars());
    for (uint32_t i = 0; i < N; ++i) w.c_[i] = comps[i].with_prec(1);
    return w;
}

WittVector WittVector::from_scalar(uint64_t p, uint32_t N, uint32_t nvars, uint64_t c) {
    // Witt coordinates of c in W(F_p) = Z_p: solve all ghost components equal to c.
    WittVector w(p, N, nvars);
    uint32_t m = 2 * N;
    uint64_t pm = upow(p, m);
    std::vector<uint64_t> lift;
    for (uint32_t n = 0; n < N; ++n) {
        uint64_t acc = 0, pi = 1;
        for (uint32_t i = 0; i < n; ++i) {
            uint64_t e = 1;
            for (uint32_t k = 0; k < n - i; ++k) e *= p;
            acc = (acc + mulmod(pi, powmod(lift[i], e, pm), pm)) % pm;
            pi *= p;
        }
        uint64_t pn = upow(p, n);
        uint64_t diff = (c % pm + pm - acc) % pm;
        if (diff % pn != 0) throw NotDivisible("scalar Witt coordinates");
        uint64_t digit = (diff / pn) % p;
        lift.push_back(digit);
        if (digit) w.c_[n] = MPoly::constant(p, 1, nvars, (int64_t)digit);
    }
    return w;
}

bool WittVector::is_zero() const {
    for (auto& f : c_)
        if (!f.is_zero()) return false;
    return true;
}

void WittVector::check(const WittVector& o) const {
    if (p_ != o.p_ || N_ != o.N_ || nv_ != o.nv_) throw RingMismatch("Witt vector params mismatch");
}

WittVector WittVector::add(const WittVector& o) const {
    check(o);
    auto uni = WittUniversal::get(p_, N_);
    std::vector<MPoly> args;
    for (auto& f : c_) args.push_back(f);
    for (auto& f : o.c_) args.push_back(f);
    WittVector r(p_, N_, nv_);
    for (uint32_t n = 0; n < N_; ++n) {
        // S_n touches X_0..X_n, Y_0..Y_n; pad the argument list to 2N slots.
        std::vector<MPoly> sub(2 * N_, MPoly(p_, 1, nv_));
        for (uint32_t i = 0; i <= n; ++i) {
            sub[i] = c_[i];
            sub[N_ + i] = o.c_[i];
        }
        r.c_[n] = uni->sum(n).with_prec(1).substitute(sub);
    }
    return r;
}

WittVector WittVector::mul(const WittVector& o) const {
    check(o);
    auto uni = WittUniversal::get(p_, N_);
    WittVector r(p_, N_, nv_);
    for (uint32_t n = 0; n < N_; ++n) {
        std::vector<MPoly> sub(2 * N_, MPoly(p_, 1, nv_));
        for (uint32_t i = 0; i <= n; ++i) {
            sub[i] = c_[i];
            sub[N_ + i] = o.c_[i];
        }
        r.c_[n] = uni->prod(n).with_prec(1).substitute(sub);
    }
    return r;
}

WittVector WittVector::neg() const {
    WittVector r = *this;
    for (auto& f : r.c_) f = f.neg();
    return r;
}

WittVector WittVector::V() const {
    WittVector r(p_, N_, nv_);
    for (uint32_t n = 1; n < N_; ++n) r.c_[n] = c_[n - 1];
    return r;
}

WittVector WittVector::F() const {
    if (N_ < 2) throw DepthExceeded("F needs N >= 2");
    WittVector r(p_, N_ - 1, nv_);
    for (uint32_t n = 0; n + 1 < N_; ++n) r.c_[n] = c_[n].pow((uint32_t)p_);
    return r;
}

WittVector WittVector::mul_p() const {
    // p*a = V(F(a)) with the truncation dropping the top component.
    WittVector r(p_, N_, nv_);
    for (uint32_t n = 1; n < N_; ++n) r.c_[n] = c_[n - 1].pow((uint32_t)p_);
    return r;
}

WittVector WittVector::scalar_mul(uint64_t c) const {
    return mul(from_scalar(p_, N_, nv_, c));
}

GrowthProfile WittVector::growth_profile() const {
    GrowthProfile g;
    for (uint32_t n = 0; n < N_; ++n) {
        if (c_[n].is_zero()) continue;
        uint32_t dg = c_[n].degree();
        g.pairs.push_back({n, dg});
        // compare dg/(n+1) with current max
        if ((uint64_t)dg * g.cstar_den > (uint64_t)g.cstar_num * (n + 1)) {
            uint32_t num = dg, den = n + 1;
            uint32_t gg = std::gcd(num, den);
            g.cstar_num = num / (gg ? gg : 1);
            g.cstar_den = den / (gg ? gg : 1);
        }
    }
    return g;
}

std::vector<MPoly> WittVector::ghost(uint32_t m) const {
    std::vector<MPoly> lifted;
    for (auto& f : c_) lifted.push_back(canonical_lift(f, m));
    return ghost_of_lift(lifted);
}

std::vector<MPoly> ghost_of_lift(const std::vector<MPoly>& lifted) {
    std::vector<MPoly> g;
    uint64_t p = lifted[0].p();
    uint32_t m = lifted[0].prec();
    uint64_t pm = upow(p, m);
    for (uint32_t n = 0; n < lifted.size(); ++n) {
        MPoly w(p, m, lifted[0].nvars());
        uint64_t pi = 1;
        for (uint32_t i = 0; i <= n; ++i) {
            uint32_t e = 1;
            for (uint32_t k = 0; k < n - i; ++k) e *= (uint32_t)p;
            w = w + lifted[i].pow(e).scale(pi % pm);
            if (i < n) pi *= p;
        }
        g.push_back(w);
    }
    return g;
}

}  // namespace drwitt
