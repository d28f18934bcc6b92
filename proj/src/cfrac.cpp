#include "cfrac.hpp"

#include <sstream>
#include <stdexcept>

namespace partdyn {

Frac Frac::make(Int num, Int den) {
    if (den <= 0) throw std::domain_error("Frac: denominator must be positive");
    if (num <= 0) throw std::domain_error("Frac: numerator must be positive");
    if (num > den) throw std::domain_error("Frac: expected a fraction in (0,1]");
    Int g = checked_gcd(num, den);
    return Frac{num / g, den / g};
}

Frac Frac::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("Frac: expected \"p/q\", got \"" + text + "\"");
    try {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Frac: expected \"p/q\", got \"" + text + "\"");
    }
}

std::string Frac::str() const {
    std::ostringstream os;
    os << p << "/" << q;
    return os.str();
}

CFExpansion CFExpansion::make(std::vector<Int> digits) {
    if (digits.empty()) throw std::domain_error("CFExpansion: empty digit list");
    for (const Int& a : digits)
        if (a < 1) throw std::domain_error("CFExpansion: digits must be >= 1");
    if (digits.size() >= 2 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    return CFExpansion{std::move(digits)};
}

CFExpansion cf_expand(const Frac& x) {
    // Euclid on q/p; for reduced p/q < 1 this ends with a final digit >= 2,
    // so the canonical form falls out directly. 1/1 expands to [1].
    if (x.p == x.q) return CFExpansion{{Int(1)}};
    std::vector<Int> digits;
    Int p = x.p, q = x.q;
    while (p != 0) {
        digits.push_back(q / p);
        Int r = q % p;
        q = p;
        p = r;
    }
    return CFExpansion{std::move(digits)};
}

ConvergentList convergents(const CFExpansion& cf) {
    ConvergentList out;
    out.pq.reserve(cf.digits.size() + 1);
    Int pm1 = 0, qm1 = 1;  // (p0, q0)
    out.pq.emplace_back(pm1, qm1);
    Int pm2 = 1, qm2 = 0;  // (p_{-1}, q_{-1})
    for (const Int& a : cf.digits) {
        Int pj = a * pm1 + pm2;
        Int qj = a * qm1 + qm2;
        out.pq.emplace_back(pj, qj);
        pm2 = pm1; qm2 = qm1;
        pm1 = pj; qm1 = qj;
    }
    return out;
}

Frac cf_value(const CFExpansion& cf) {
    ConvergentList cl = convergents(cf);
    const auto& [p, q] = cl.pq.back();
    return Frac::make(p, q);
}

Frac mirror(const CFExpansion& cf) {
    ConvergentList cl = convergents(cf);
    const auto& [pk, qk] = cl.pq.back();
    (void)pk;
    const auto& [pk1, qk1] = cl.pq[cl.pq.size() - 2];
    (void)pk1;
    return Frac::make(qk1, qk);
}

}  // namespace partdyn
