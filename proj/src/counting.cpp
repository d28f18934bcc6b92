#include "counting.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "extended_farey.hpp"
#include "farey.hpp"

namespace partdyn {

namespace {

void require_positive(const Int& n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": requires n >= 1");
}

}  // namespace

Int totient(const Int& n) {
    require_positive(n, "totient");
    Int result = n, m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Int divisor_count(const Int& n) {
    require_positive(n, "divisor_count");
    Int m = n, count = 1;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            Int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            count *= e + 1;
        }
    }
    if (m > 1) count *= 2;
    return count;
}

Int divisor_sum(const Int& n) {
    require_positive(n, "divisor_sum");
    Int m = n, sum = 1;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            Int pk = 1, geom = 1;
            while (m % p == 0) { m /= p; pk *= p; geom += pk; }
            sum *= geom;
        }
    }
    if (m > 1) sum *= m + 1;
    return sum;
}

Int divisor_sigma(int j, const Int& n) {
    if (j == 0) return divisor_count(n);
    if (j == 1) return divisor_sum(n);
    throw std::invalid_argument("divisor_sigma: j must be 0 or 1");
}

Int p2_formula(const Int& n) {
    if (n < 2) throw std::domain_error("p2_formula: requires n >= 2");
    Int total = 0;
    for (Int r = 1; r < n; ++r) {
        Int g = checked_gcd(r, n);
        total += (depth(r / g, n / g) - 1) * divisor_count(g);
    }
    if (total % 2 != 0) throw std::logic_error("p2_formula: odd sum");
    return total / 2;
}

Int p2_kim(const Int& n) {
    if (n < 2) throw std::domain_error("p2_kim: requires n >= 2");
    Int total = 0;
    for (Int r = 1; r < n; ++r) total += divisor_count(r) * divisor_count(n - r);
    total -= divisor_sum(n);
    total += divisor_count(n);
    if (total % 2 != 0) throw std::logic_error("p2_kim: odd sum");
    return total / 2;
}

Int p2_brute(const Int& n) {
    if (n < 2) throw std::domain_error("p2_brute: requires n >= 2");
    if (n > std::numeric_limits<std::int64_t>::max())
        throw std::domain_error("p2_brute: n too large");
    // Count pairs n1 > n2 >= 1, k1, k2 >= 1 with k1*n1 + k2*n2 = n.
    const std::int64_t nn = static_cast<std::int64_t>(n);
    Int count = 0;
    for (std::int64_t n1 = 2; n1 < nn; ++n1)
        for (std::int64_t k1 = 1; k1 * n1 < nn; ++k1) {
            std::int64_t rem = nn - k1 * n1;
            for (std::int64_t n2 = 1; n2 < n1; ++n2)
                if (rem % n2 == 0) ++count;
        }
    return count;
}

Int pF2(const Int& n) {
    if (n < 2) throw std::domain_error("pF2: requires n >= 2");
    Int total = 0;
    for (Int r = 1; r < n; ++r)
        if (checked_gcd(r, n) == 1) total += depth(r, n);
    total -= totient(n);
    if (total % 2 != 0) throw std::logic_error("pF2: odd sum");
    return total / 2;
}

Int pF2_brute(const Int& n) {
    if (n < 2) throw std::domain_error("pF2_brute: requires n >= 2");
    if (n > std::numeric_limits<std::int64_t>::max())
        throw std::domain_error("pF2_brute: n too large");
    const std::int64_t nn = static_cast<std::int64_t>(n);
    Int count = 0;
    for (std::int64_t n1 = 2; n1 < nn; ++n1)
        for (std::int64_t k1 = 1; k1 * n1 < nn; ++k1) {
            std::int64_t rem = nn - k1 * n1;
            for (std::int64_t n2 = 1; n2 < n1; ++n2)
                if (rem % n2 == 0 && std::gcd(n1, n2) == 1 &&
                    std::gcd(k1, rem / n2) == 1)
                    ++count;
        }
    return count;
}

std::vector<CoverOrbit> orbit_cover_decomposition(const Int& n) {
    if (n < 2) throw std::domain_error("orbit_cover_decomposition: requires n >= 2");
    std::vector<CoverOrbit> cover;
    for (Int r = 1; 2 * r <= n; ++r) {
        Int g = checked_gcd(r, n);
        for (Int e = 1; e <= g; ++e) {
            if (g % e != 0) continue;
            EfOrbit orbit = ef_orbit(n / e, r / e, e);
            CoverOrbit co{r, e, orbit.root, {}};
            // Generations 1 .. depth-1: skip the final terminal row, whose raw
            // state has equal parts and is not a two-distinct-part partition.
            for (std::size_t i = 0; i + 1 < orbit.steps.size(); ++i)
                co.members.push_back(Partition::canonicalize(orbit.steps[i].raw_parts,
                                                             orbit.steps[i].raw_mults));
            cover.push_back(std::move(co));
        }
    }
    return cover;
}

bool obtainable(const Int& n1, const Int& n2, const Int& k1, const Int& k2) {
    if (n1 <= n2 || n2 < 1 || k1 < 1 || k2 < 1)
        throw std::domain_error("obtainable: requires n1 > n2 >= 1 and k1, k2 >= 1");
    return checked_gcd(n1, n2) == 1 && checked_gcd(k1, k2) == 1;
}

}  // namespace partdyn
