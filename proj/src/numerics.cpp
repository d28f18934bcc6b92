#include "numerics.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace partdyn {

Int checked_gcd(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw std::domain_error("gcd: negative operand");
    if (a == 0 && b == 0) throw std::domain_error("gcd: gcd(0,0) undefined");
    return boost::multiprecision::gcd(a, b);
}

IntMat::IntMat(std::size_t dim) : dim_(dim), e_(dim * dim, Int(0)) {}

IntMat::IntMat(std::size_t dim, std::initializer_list<Int> entries)
    : dim_(dim), e_(entries) {
    if (e_.size() != dim * dim) throw std::invalid_argument("IntMat: wrong entry count");
}

IntMat::IntMat(std::size_t dim, std::vector<Int> entries)
    : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != dim * dim) throw std::invalid_argument("IntMat: wrong entry count");
}

IntMat IntMat::identity(std::size_t dim) {
    IntMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("IntMat: vector dimension mismatch");
    std::vector<Int> out(dim_, Int(0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMat IntMat::transposed() const {
    IntMat out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

// Bareiss: division-free pivoting with exact integer divisions.
Int IntMat::det() const {
    if (dim_ == 0) return 1;
    std::vector<Int> a = e_;
    const std::size_t n = dim_;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                a[i * n + j] = num / prev;  // exact by Bareiss
            }
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace partdyn
