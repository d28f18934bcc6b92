#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace partdyn {

using Int = boost::multiprecision::cpp_int;

// gcd for nonnegative operands; gcd(a,0) = a. Rejects negatives and (0,0).
Int checked_gcd(const Int& a, const Int& b);

// Dense square integer matrix, row major. Dimensions stay tiny (2 for the
// interval maps, the map dimension m otherwise), so no sparsity tricks.
class IntMat {
public:
    IntMat() = default;
    explicit IntMat(std::size_t dim);
    IntMat(std::size_t dim, std::initializer_list<Int> entries);
    IntMat(std::size_t dim, std::vector<Int> entries);

    static IntMat identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Int& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

    IntMat operator*(const IntMat& rhs) const;           // mat_mul
    std::vector<Int> apply(const std::vector<Int>& v) const;  // mat_vec, column vector
    IntMat transposed() const;
    Int det() const;  // exact, fraction-free elimination

    bool operator==(const IntMat&) const = default;

    std::string str() const;  // "[[a,b],[c,d]]"

private:
    std::size_t dim_ = 0;
    std::vector<Int> e_;
};

}  // namespace partdyn
