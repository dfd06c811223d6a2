#ifndef DRWITT_PARAMS_HPP
#define DRWITT_PARAMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace drwitt {

// Domain errors. Names mirror the failure modes of the arithmetic layers.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& m) : std::runtime_error("NotDivisible: " + m) {}
};
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& m) : std::runtime_error("PrecisionExhausted: " + m) {}
};
struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& m) : std::runtime_error("NotAUnit: " + m) {}
};
struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& m) : std::runtime_error("RingMismatch: " + m) {}
};
struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& m) : std::runtime_error("RankMismatch: " + m) {}
};
struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& m) : std::runtime_error("DepthExceeded: " + m) {}
};
struct NonTerminating : std::runtime_error {
    explicit NonTerminating(const std::string& m) : std::runtime_error("NonTerminating: " + m) {}
};
struct NotIntegrable : std::runtime_error {
    explicit NotIntegrable(const std::string& m) : std::runtime_error("NotIntegrable: " + m) {}
};
struct SliceMismatch : std::runtime_error {
    explicit SliceMismatch(const std::string& m) : std::runtime_error("SliceMismatch: " + m) {}
};
struct PrecisionBudgetExceeded : std::runtime_error {
    explicit PrecisionBudgetExceeded(const std::string& m)
        : std::runtime_error("PrecisionBudgetExceeded: " + m) {}
};

// Shared truncation policy. Every module reads p, N, D, d from here.
//   p : odd prime >= 3
//   N : Witt length and p-adic working precision
//   D : total-degree cap (applied only at declared module boundaries)
//   d : number of variables, 1 <= d <= 3
struct Params {
    uint32_t p = 3;
    uint32_t N = 2;
    uint32_t D = 6;
    uint32_t d = 1;

    Params() = default;
    Params(uint32_t p_, uint32_t N_, uint32_t D_, uint32_t d_) : p(p_), N(N_), D(D_), d(d_) {
        validate();
    }

    void validate() const {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime >= 3");
        for (uint32_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) throw std::invalid_argument("p must be prime");
        if (N < 1) throw std::invalid_argument("N must be >= 1");
        if (D < 1) throw std::invalid_argument("D must be >= 1");
        if (d < 1 || d > 3) throw std::invalid_argument("d must be in [1,3]");
    }

    // kappa = floor(log_p d); the comparison bound is 2*kappa.
    uint32_t kappa() const {
        uint32_t k = 0;
        uint64_t q = p;
        while (q <= d) {
            ++k;
            q *= p;
        }
        return k;
    }

    // Extra digits carried through ghost computations so outputs are exact mod p^N.
    uint32_t reserve() const { return N; }
};

}  // namespace drwitt

#endif
