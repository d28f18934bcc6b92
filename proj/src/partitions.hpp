#pragma once

#include "numerics.hpp"

#include <functional>
#include <optional>

namespace partdyn {

// Multiplicity form (n1^k1, ..., nm^km): parts strictly decreasing and
// positive, multiplicities nonnegative with k1 >= 1. Zero multiplicities are
// legal storage (orbit roots look like (n,r)x[1,0]); they are dropped when a
// statement is about the underlying partition rather than the orbit state.
class Partition {
public:
    static Partition make(std::vector<Int> parts, std::vector<Int> mults);

    // Sorts part entries descending (stable), merges equal parts by summing
    // multiplicities, drops leading zero-multiplicity entries, validates.
    static Partition canonicalize(std::vector<Int> parts, std::vector<Int> mults);

    const std::vector<Int>& parts() const { return parts_; }
    const std::vector<Int>& mults() const { return mults_; }
    std::size_t m() const { return parts_.size(); }

    Int weight() const;
    Partition cleaned() const;  // zero-multiplicity entries removed
    Partition conjugate() const;
    std::vector<Int> young_rows() const;  // expanded row lengths, descending

    bool same_partition(const Partition& o) const;  // equality after cleaning

    std::string compact() const;  // "(5^3,3^2,2)", zero-mult entries omitted

    bool operator==(const Partition&) const = default;

private:
    Partition(std::vector<Int> parts, std::vector<Int> mults)
        : parts_(std::move(parts)), mults_(std::move(mults)) {}
    std::vector<Int> parts_, mults_;
};

// Visits partitions of n in lexicographically decreasing order of expanded
// part lists; with distinct filter set, only those with exactly that many
// distinct part values. Return false from the visitor to stop early.
void for_each_partition(const Int& n, std::optional<std::size_t> distinct,
                        const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(const Int& n,
                                            std::optional<std::size_t> distinct = {});

// Independent count of p(n) by the classical two-dimensional recurrence; used
// to validate the enumerator.
Int count_partitions_dp(const Int& n);

}  // namespace partdyn
