#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dfv/partition.hpp"
#include "dfv/syd.hpp"

namespace dfv {

/// Dense matrix over Q. All arithmetic is exact; no floating point anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size(), 0) {}
    RationalMatrix(int rows, int cols, std::vector<mpq_class> entries);

    static RationalMatrix identity(int n);
    static RationalMatrix fromInt(const std::vector<std::vector<int>>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    RationalMatrix transpose() const;
    RationalMatrix block(int i0, int j0, int rows, int cols) const;
    bool isZero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix operator*(const mpq_class& c) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string str() const;  // debug grid

private:
    std::size_t size() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

int rank_rational(const RationalMatrix& m);

/// Subspace of Q^ambient held by a row-reduced (RREF) basis, so equal subspaces
/// compare equal.
class LinearSubspace {
public:
    LinearSubspace() = default;
    explicit LinearSubspace(int ambientDim) : ambient_(ambientDim) {}

    /// Span of the given vectors (rows), reduced to RREF.
    static LinearSubspace span(int ambientDim, const std::vector<std::vector<mpq_class>>& vectors);

    int ambientDim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<mpq_class>>& basis() const { return basis_; }
    bool contains(const std::vector<mpq_class>& v) const;

    friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

private:
    int ambient_ = 0;
    std::vector<std::vector<mpq_class>> basis_;  // RREF rows
};

/// Right kernel of m.
LinearSubspace kernel_basis(const RationalMatrix& m);

LinearSubspace intersect(const LinearSubspace& u, const LinearSubspace& v);

/// Image of u under the linear map m.
LinearSubspace apply(const RationalMatrix& m, const LinearSubspace& u);

/// Jordan type of a nilpotent matrix from its rank sequence; throws
/// std::domain_error when x is not nilpotent.
Partition jordan_type_nilpotent(const RationalMatrix& x);

/// Graded nilpotent e = (0 z; w 0) acting on Q^n (+) Q^n.
struct GradedNilpotent {
    int n = 0;
    RationalMatrix z, w;  // both n x n

    RationalMatrix assemble() const;
};

/// Signed Young diagram of the orbit of a graded nilpotent under GL_n x GL_n.
/// A row of length l with leading sign d corresponds to a Jordan chain whose
/// generator lies in V^d; counts come from graded kernel dimensions.
SignedYoungDiagram signed_diagram_graded(const GradedNilpotent& e);

}  // namespace dfv
