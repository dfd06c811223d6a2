#include "drwitt/dagger.hpp"

#include <bit>

namespace drwitt {

DaggerSeries DaggerSeries::from_layers(uint64_t p, uint32_t N, const std::vector<MPoly>& layers) {
    if (layers.size() > N) throw PrecisionExhausted("more layers than precision digits");
    MPoly acc(p, N, layers.empty() ? 1 : layers[0].nvars());
    uint64_t pk = 1;
    for (uint32_t k = 0; k < layers.size(); ++k) {
        acc = acc + layers[k].with_prec(N).scale(pk);
        pk *= p;
    }
    return DaggerSeries(acc);
}

MPoly DaggerSeries::layer(uint32_t k) const {
    MPoly f(p(), 1, nvars());
    if (k >= N()) return f;
    uint64_t pk = upow(p(), k);
    for (auto& [mo, c] : v_.terms()) f.add_term(mo, (c / pk) % p());
    return f;
}

std::vector<MPoly> DaggerSeries::layers() const {
    std::vector<MPoly> ls;
    for (uint32_t k = 0; k < N(); ++k) ls.push_back(layer(k));
    return ls;
}

bool DaggerSeries::check_overconvergent(uint64_t cnum, uint64_t cden) const {
    for (uint32_t k = 0; k < N(); ++k) {
        MPoly f = layer(k);
        if (f.is_zero()) continue;
        // deg f_k <= (cnum/cden)(k+1)
        if ((uint64_t)f.degree() * cden > cnum * (k + 1)) return false;
    }
    return true;
}

std::pair<uint32_t, uint32_t> DaggerSeries::min_certificate() const {
    uint32_t num = 0, den = 1;
    for (uint32_t k = 0; k < N(); ++k) {
        MPoly f = layer(k);
        if (f.is_zero()) continue;
        if ((uint64_t)f.degree() * den > (uint64_t)num * (k + 1)) {
            num = f.degree();
            den = k + 1;
        }
    }
    return {num, den};
}

FrobeniusLift::FrobeniusLift(const Params& par, std::vector<MPoly> images) : par_(par) {
    if (images.size() != par.d) throw RingMismatch("Frobenius lift needs one image per variable");
    uint32_t wm = par.N + par.reserve();
    for (uint32_t i = 0; i < par.d; ++i) {
        MPoly img = images[i].with_prec(wm);
        MPoly xp = MPoly::variable(par.p, 1, par.d, i).pow(par.p);
        if (!(img.with_prec(1) == xp))
            throw NotDivisible("Frobenius image " + std::to_string(i) + " is not x^p mod p");
        images_.push_back(img);
    }
}

MPoly FrobeniusLift::iterate(const MPoly& b, uint32_t n) const {
    MPoly r = b;
    std::vector<MPoly> imgs;
    for (auto& f : images_) imgs.push_back(f.with_prec(b.prec()));
    for (uint32_t k = 0; k < n; ++k) r = r.substitute(imgs);
    return r;
}

DaggerSeries FrobeniusLift::apply(const DaggerSeries& a) const {
    return DaggerSeries(iterate(a.poly(), 1));
}

int insertion_sign(uint8_t mask, unsigned i) {
    if (mask & (1u << i)) return 0;
    int below = std::popcount((uint8_t)(mask & ((1u << i) - 1)));
    return below % 2 ? -1 : 1;
}

int merge_sign(uint8_t a, uint8_t b) {
    if (a & b) return 0;
    // count inversions: pairs (s in a, t in b) with s > t
    int inv = 0;
    for (unsigned t = 0; t < 8; ++t)
        if (b & (1u << t)) inv += std::popcount((uint8_t)(a >> (t + 1)));
    return inv % 2 ? -1 : 1;
}

MwForm MwForm::scalar(const MPoly& f) {
    MwForm w(f.p(), f.prec(), f.nvars(), 0);
    w.add_coeff(0, f);
    return w;
}

MwForm MwForm::monomial_form(const MPoly& f, uint8_t mask) {
    MwForm w(f.p(), f.prec(), f.nvars(), (uint32_t)std::popcount(mask));
    w.add_coeff(mask, f);
    return w;
}

bool MwForm::is_zero() const {
    for (auto& [m, f] : c_)
        if (!f.is_zero()) return false;
    return true;
}

MPoly MwForm::coeff(uint8_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? MPoly(p_, N_, nv_) : it->second;
}

void MwForm::add_coeff(uint8_t mask, const MPoly& f) {
    if ((uint32_t)std::popcount(mask) != q_) throw RankMismatch("form coefficient degree mismatch");
    if (f.is_zero()) return;
    auto it = c_.find(mask);
    if (it == c_.end()) {
        c_.emplace(mask, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) c_.erase(it);
    }
}

MwForm MwForm::add(const MwForm& o) const {
    if (q_ != o.q_) throw RankMismatch("form degree mismatch in add");
    MwForm r = *this;
    for (auto& [m, f] : o.c_) r.add_coeff(m, f);
    return r;
}

MwForm MwForm::sub(const MwForm& o) const {
    if (q_ != o.q_) throw RankMismatch("form degree mismatch in sub");
    MwForm r = *this;
    for (auto& [m, f] : o.c_) r.add_coeff(m, f.neg());
    return r;
}

MwForm MwForm::scale(const MPoly& f) const {
    MwForm r(p_, N_, nv_, q_);
    for (auto& [m, g] : c_) r.add_coeff(m, g * f);
    return r;
}

MwForm MwForm::wedge(const MwForm& o) const {
    MwForm r(p_, N_, nv_, q_ + o.q_);
    for (auto& [ma, fa] : c_)
        for (auto& [mb, fb] : o.c_) {
            int s = merge_sign(ma, mb);
            if (!s) continue;
            MPoly prod = fa * fb;
            r.add_coeff(ma | mb, s > 0 ? prod : prod.neg());
        }
    return r;
}

MwForm MwForm::d() const {
    MwForm r(p_, N_, nv_, q_ + 1);
    for (auto& [m, f] : c_)
        for (unsigned i = 0; i < nv_; ++i) {
            int s = insertion_sign(m, i);
            if (!s) continue;
            MPoly df = f.derivative(i);
            if (df.is_zero()) continue;
            r.add_coeff(m | (1u << i), s > 0 ? df : df.neg());
        }
    return r;
}

bool MwForm::operator==(const MwForm& o) const {
    return q_ == o.q_ && sub(o).is_zero();
}

std::string MwForm::str() const {
    if (c_.empty()) return "0";
    static const char* names[3] = {"dx", "dy", "dz"};
    std::string s;
    for (auto& [m, f] : c_) {
        if (!s.empty()) s += " + ";
        std::string basis;
        for (unsigned i = 0; i < nv_; ++i)
            if (m & (1u << i)) {
                if (!basis.empty()) basis += "^";
                basis += names[i];
            }
        s += "(" + f.str() + ")";
        if (!basis.empty()) s += " " + basis;
    }
    return s;
}

MwConnection::MwConnection(const Params& par, uint32_t rank) : par_(par), r_(rank) {
    m_.assign((size_t)rank * rank, MwForm(par.p, par.N, par.d, 1));
}

std::vector<MwForm> MwConnection::apply(const std::vector<DaggerSeries>& s) const {
    if (s.size() != r_) throw RankMismatch("section rank mismatch");
    std::vector<MwForm> out;
    for (uint32_t i = 0; i < r_; ++i) {
        MwForm acc = MwForm::scalar(s[i].poly()).d();
        for (uint32_t j = 0; j < r_; ++j) acc = acc.add(entry(i, j).scale(s[j].poly()));
        out.push_back(acc);
    }
    return out;
}

std::vector<MwForm> MwConnection::curvature() const {
    std::vector<MwForm> out;
    for (uint32_t i = 0; i < r_; ++i)
        for (uint32_t j = 0; j < r_; ++j) {
            MwForm acc = entry(i, j).d();
            for (uint32_t k = 0; k < r_; ++k) acc = acc.add(entry(i, k).wedge(entry(k, j)));
            out.push_back(acc);
        }
    return out;
}

bool MwConnection::is_integrable() const {
    for (auto& w : curvature())
        if (!w.is_zero()) return false;
    return true;
}

}  // namespace drwitt
