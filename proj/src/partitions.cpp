#include "partitions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partdyn {

namespace {

void validate(const std::vector<Int>& parts, const std::vector<Int>& mults) {
    if (parts.empty()) throw std::domain_error("Partition: no parts");
    if (parts.size() != mults.size())
        throw std::domain_error("Partition: parts/mults length mismatch");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::domain_error("Partition: parts must be positive");
        if (i && parts[i] >= parts[i - 1])
            throw std::domain_error("Partition: parts must strictly decrease");
        if (mults[i] < 0) throw std::domain_error("Partition: negative multiplicity");
    }
    if (mults[0] < 1) throw std::domain_error("Partition: leading multiplicity must be >= 1");
}

}  // namespace

Partition Partition::make(std::vector<Int> parts, std::vector<Int> mults) {
    validate(parts, mults);
    return Partition(std::move(parts), std::move(mults));
}

Partition Partition::canonicalize(std::vector<Int> parts, std::vector<Int> mults) {
    if (parts.size() != mults.size())
        throw std::domain_error("Partition: parts/mults length mismatch");
    std::vector<std::size_t> idx(parts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return parts[a] > parts[b]; });
    std::vector<Int> p, k;
    for (std::size_t i : idx) {
        if (!p.empty() && p.back() == parts[i]) {
            k.back() += mults[i];
        } else {
            p.push_back(parts[i]);
            k.push_back(mults[i]);
        }
    }
    while (!k.empty() && k.front() == 0) {
        p.erase(p.begin());
        k.erase(k.begin());
    }
    return make(std::move(p), std::move(k));
}

Int Partition::weight() const {
    Int w = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) w += parts_[i] * mults_[i];
    return w;
}

Partition Partition::cleaned() const {
    std::vector<Int> p, k;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (mults_[i] > 0) {
            p.push_back(parts_[i]);
            k.push_back(mults_[i]);
        }
    return make(std::move(p), std::move(k));
}

Partition Partition::conjugate() const {
    Partition c = cleaned();
    const auto& n = c.parts_;
    const auto& k = c.mults_;
    const std::size_t m = n.size();
    // Columns of the Young diagram: the first n_m columns have k1+...+km cells,
    // the next n_{m-1}-n_m have k1+...+k_{m-1}, and so on.
    std::vector<Int> parts, mults;
    Int prefix = 0;
    for (const Int& ki : k) prefix += ki;
    for (std::size_t i = m; i-- > 0;) {
        parts.push_back(prefix);
        mults.push_back(i + 1 == m ? n[m - 1] : n[i] - n[i + 1]);
        prefix -= k[i];
    }
    return make(std::move(parts), std::move(mults));
}

std::vector<Int> Partition::young_rows() const {
    Partition c = cleaned();
    std::vector<Int> rows;
    for (std::size_t i = 0; i < c.parts_.size(); ++i) {
        if (c.mults_[i] > std::numeric_limits<std::size_t>::max() / 2)
            throw std::domain_error("young_rows: multiplicity too large to expand");
        std::size_t reps = static_cast<std::size_t>(c.mults_[i]);
        for (std::size_t r = 0; r < reps; ++r) rows.push_back(c.parts_[i]);
    }
    return rows;
}

bool Partition::same_partition(const Partition& o) const {
    return cleaned() == o.cleaned();
}

std::string Partition::compact() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (mults_[i] == 0) continue;
        if (!first) os << ",";
        first = false;
        os << parts_[i];
        if (mults_[i] != 1) os << "^" << mults_[i];
    }
    os << ")";
    return os.str();
}

namespace {

// Runs accumulated as (value, count); recursion picks the next smaller value.
bool emit_rec(std::vector<Int>& vals, std::vector<Int>& cnts, const Int& rem,
              const Int& max_val, std::optional<std::size_t> distinct,
              const std::function<bool(const Partition&)>& visit) {
    if (rem == 0) {
        if (distinct && vals.size() != *distinct) return true;
        return visit(Partition::make(vals, cnts));
    }
    if (distinct && vals.size() >= *distinct) {
        // Exactly one run allowed to finish the weight: the largest feasible
        // value short-circuit does not apply; just fail fast below.
        return true;
    }
    Int v = max_val < rem ? max_val : rem;
    for (; v >= 1; --v) {
        Int c = rem / v;
        for (; c >= 1; --c) {
            vals.push_back(v);
            cnts.push_back(c);
            bool keep = emit_rec(vals, cnts, rem - v * c, v - 1, distinct, visit);
            vals.pop_back();
            cnts.pop_back();
            if (!keep) return false;
        }
    }
    return true;
}

}  // namespace

void for_each_partition(const Int& n, std::optional<std::size_t> distinct,
                        const std::function<bool(const Partition&)>& visit) {
    if (n < 1) throw std::domain_error("for_each_partition: requires n >= 1");
    if (distinct && *distinct == 0)
        throw std::domain_error("for_each_partition: distinct filter must be >= 1");
    std::vector<Int> vals, cnts;
    emit_rec(vals, cnts, n, n, distinct, visit);
}

std::vector<Partition> enumerate_partitions(const Int& n, std::optional<std::size_t> distinct) {
    std::vector<Partition> out;
    for_each_partition(n, distinct, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Int count_partitions_dp(const Int& n) {
    if (n < 0) throw std::domain_error("count_partitions_dp: negative n");
    if (n > 100000) throw std::domain_error("count_partitions_dp: n too large");
    std::size_t nn = static_cast<std::size_t>(n);
    std::vector<Int> dp(nn + 1, Int(0));
    dp[0] = 1;
    for (std::size_t part = 1; part <= nn; ++part)
        for (std::size_t w = part; w <= nn; ++w) dp[w] += dp[w - part];
    return dp[nn];
}

}  // namespace partdyn
