#include "drwitt/mpoly.hpp"

#include <cctype>
#include <sstream>

namespace drwitt {

static const char* kVarNames[3] = {"x", "y", "z"};

std::string mono_str(const Mono& m, uint32_t nvars) {
    std::string s;
    for (unsigned i = 0; i < nvars; ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += nvars <= 3 ? kVarNames[i] : ("x" + std::to_string(i));
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string MPoly::str(bool with_mod) const {
    if (t_.empty()) return "0";
    // Display in descending graded-lex order.
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        std::string ms = mono_str(it->first, nv_);
        if (ms.empty())
            s += std::to_string(it->second);
        else if (it->second == 1)
            s += ms;
        else
            s += std::to_string(it->second) + "*" + ms;
    }
    if (with_mod) s += " (mod " + std::to_string(p_) + "^" + std::to_string(m_) + ")";
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    uint64_t p;
    uint32_t m, nv;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    uint64_t number() {
        skip();
        uint64_t v = 0;
        bool any = false;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            ++i;
            any = true;
        }
        if (!any) throw std::invalid_argument("expected number in polynomial at pos " + std::to_string(i));
        return v;
    }
    int var_index() {
        skip();
        if (i >= s.size()) return -1;
        char c = s[i];
        if (c == 'x' || c == 'y' || c == 'z') {
            ++i;
            // x0, x1, ... style for internal rings
            if (c == 'x' && i < s.size() && std::isdigit((unsigned char)s[i])) {
                size_t save = i;
                uint64_t k = number();
                if (k < nv) return (int)k;
                i = save;
            }
            int idx = c - 'x';
            if ((uint32_t)idx >= nv) throw std::invalid_argument("variable out of range in polynomial");
            return idx;
        }
        return -1;
    }

    // factor := number | var [^ exp]
    bool factor(Mono& mo, uint64_t& coeff) {
        skip();
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            uint64_t v = number() % upow(p, m);
            uint32_t e = 1;
            if (eat('^')) e = (uint32_t)number();
            uint64_t acc = 1, pm = upow(p, m);
            for (uint32_t k = 0; k < e; ++k) acc = mulmod(acc, v, pm);
            coeff = mulmod(coeff, acc, pm);
            return true;
        }
        int vi = var_index();
        if (vi < 0) return false;
        uint32_t e = 1;
        if (eat('^')) {
            eat('(');
            e = (uint32_t)number();
            eat(')');
        }
        mo.e[vi] += e;
        return true;
    }

    void term(MPoly& out, int sign) {
        Mono mo{};
        uint64_t coeff = 1;
        if (!factor(mo, coeff)) throw std::invalid_argument("expected term in polynomial");
        while (true) {
            size_t save = i;
            if (eat('*')) {
                if (!factor(mo, coeff)) throw std::invalid_argument("dangling * in polynomial");
                continue;
            }
            // implicit product: "2x", "x y"
            skip();
            if (i < s.size() && (std::isalpha((unsigned char)s[i]))) {
                if (factor(mo, coeff)) continue;
            }
            i = save;
            break;
        }
        uint64_t pm = upow(p, m);
        out.add_term(mo, sign > 0 ? coeff : (pm - coeff % pm) % pm);
    }

    MPoly run() {
        MPoly out(p, m, nv);
        skip();
        int sign = 1;
        if (eat('-')) sign = -1;
        term(out, sign);
        while (true) {
            skip();
            if (eat('+'))
                term(out, 1);
            else if (eat('-'))
                term(out, -1);
            else
                break;
        }
        skip();
        // optional "(mod p^m)" suffix
        if (i < s.size() && s[i] == '(') {
            size_t save = i;
            ++i;
            skip();
            if (s.compare(i, 3, "mod") == 0) {
                i += 3;
                uint64_t pp = number();
                uint32_t mm = 1;
                if (eat('^')) mm = (uint32_t)number();
                if (!eat(')')) throw std::invalid_argument("unterminated (mod ...)");
                if (pp != p || mm != m) throw RingMismatch("(mod ...) suffix does not match expected ring");
            } else {
                i = save;
            }
        }
        skip();
        if (i != s.size()) throw std::invalid_argument("trailing input in polynomial: '" + s.substr(i) + "'");
        return out;
    }
};

}  // namespace

MPoly parse_poly(const std::string& text, uint64_t p, uint32_t m, uint32_t nvars) {
    if (text.empty()) throw std::invalid_argument("empty polynomial");
    if (text == "0") return MPoly(p, m, nvars);
    Parser ps{text, 0, p, m, nvars};
    return ps.run();
}

}  // namespace drwitt
