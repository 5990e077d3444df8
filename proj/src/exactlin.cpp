#include "dfv/exactlin.hpp"

#include <sstream>
#include <stdexcept>

namespace dfv {

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<mpq_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != size()) throw std::invalid_argument("RationalMatrix: wrong entry count");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::fromInt(const std::vector<std::vector<int>>& entries) {
    int r = static_cast<int>(entries.size());
    int c = r == 0 ? 0 : static_cast<int>(entries[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("RationalMatrix::fromInt: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::block(int i0, int j0, int rows, int cols) const {
    RationalMatrix b(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

bool RationalMatrix::isZero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: size mismatch in product");
    RationalMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const mpq_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RationalMatrix: size mismatch in sum");
    RationalMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RationalMatrix: size mismatch in difference");
    RationalMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RationalMatrix RationalMatrix::operator*(const mpq_class& c) const {
    RationalMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * c;
    return m;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        mpq_class inv = rows[rank][static_cast<std::size_t>(col)];
        for (int j = col; j < cols; ++j) rows[rank][static_cast<std::size_t>(j)] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            mpq_class f = rows[i][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                rows[i][static_cast<std::size_t>(j)] -= f * rows[rank][static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

std::vector<std::vector<mpq_class>> matrixRows(const RationalMatrix& m) {
    std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
    return rows;
}

}  // namespace

int rank_rational(const RationalMatrix& m) {
    auto rows = matrixRows(m);
    rref(rows, m.cols());
    return static_cast<int>(rows.size());
}

LinearSubspace LinearSubspace::span(int ambientDim,
                                    const std::vector<std::vector<mpq_class>>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambientDim)
            throw std::invalid_argument("LinearSubspace::span: vector has wrong dimension");
    LinearSubspace s(ambientDim);
    s.basis_ = vectors;
    rref(s.basis_, ambientDim);
    return s;
}

bool LinearSubspace::contains(const std::vector<mpq_class>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("LinearSubspace::contains: wrong dimension");
    std::vector<mpq_class> r = v;
    for (const auto& row : basis_) {
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        mpq_class f = r[static_cast<std::size_t>(lead)];
        if (f == 0) continue;
        for (int j = lead; j < ambient_; ++j)
            r[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

LinearSubspace kernel_basis(const RationalMatrix& m) {
    auto rows = matrixRows(m);
    std::vector<int> pivots = rref(rows, m.cols());
    std::vector<char> isPivot(static_cast<std::size_t>(m.cols()), 0);
    for (int p : pivots) isPivot[static_cast<std::size_t>(p)] = 1;

    std::vector<std::vector<mpq_class>> basis;
    for (int freeCol = 0; freeCol < m.cols(); ++freeCol) {
        if (isPivot[static_cast<std::size_t>(freeCol)]) continue;
        std::vector<mpq_class> v(static_cast<std::size_t>(m.cols()), 0);
        v[static_cast<std::size_t>(freeCol)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = -rows[i][static_cast<std::size_t>(freeCol)];
        basis.push_back(std::move(v));
    }
    return LinearSubspace::span(m.cols(), basis);
}

LinearSubspace intersect(const LinearSubspace& u, const LinearSubspace& v) {
    if (u.ambientDim() != v.ambientDim())
        throw std::invalid_argument("intersect: ambient dimensions differ");
    // solve a^T Bu = b^T Bv: kernel of the stacked coefficient matrix
    int du = u.dim(), dv = v.dim();
    RationalMatrix m(u.ambientDim(), du + dv);
    for (int j = 0; j < du; ++j)
        for (int i = 0; i < u.ambientDim(); ++i)
            m.at(i, j) = u.basis()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int j = 0; j < dv; ++j)
        for (int i = 0; i < v.ambientDim(); ++i)
            m.at(i, du + j) = -v.basis()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    LinearSubspace coeffs = kernel_basis(m);
    std::vector<std::vector<mpq_class>> vectors;
    for (const auto& c : coeffs.basis()) {
        std::vector<mpq_class> w(static_cast<std::size_t>(u.ambientDim()), 0);
        for (int j = 0; j < du; ++j)
            for (int i = 0; i < u.ambientDim(); ++i)
                w[static_cast<std::size_t>(i)] +=
                    c[static_cast<std::size_t>(j)] * u.basis()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        vectors.push_back(std::move(w));
    }
    return LinearSubspace::span(u.ambientDim(), vectors);
}

LinearSubspace apply(const RationalMatrix& m, const LinearSubspace& u) {
    if (m.cols() != u.ambientDim()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<std::vector<mpq_class>> vectors;
    for (const auto& b : u.basis()) {
        std::vector<mpq_class> w(static_cast<std::size_t>(m.rows()), 0);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                w[static_cast<std::size_t>(i)] += m.at(i, j) * b[static_cast<std::size_t>(j)];
            }
        vectors.push_back(std::move(w));
    }
    return LinearSubspace::span(m.rows(), vectors);
}

Partition jordan_type_nilpotent(const RationalMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("jordan_type_nilpotent: matrix not square");
    int n = x.rows();
    if (n == 0) return Partition();
    std::vector<int> ranks;  // rank(x^l) for l = 0, 1, ...
    ranks.push_back(n);
    RationalMatrix power = x;
    for (int l = 1; l <= n && ranks.back() > 0; ++l) {
        ranks.push_back(rank_rational(power));
        power = power * x;
    }
    if (ranks.back() != 0) throw std::domain_error("jordan_type_nilpotent: matrix is not nilpotent");
    std::vector<int> parts;
    for (std::size_t l = 1; l < ranks.size(); ++l) {
        int blocksGeqL = ranks[l - 1] - ranks[l];
        int blocksGeqL1 = (l < ranks.size() - 1) ? ranks[l] - ranks[l + 1] : 0;
        for (int k = 0; k < blocksGeqL - blocksGeqL1; ++k) parts.push_back(static_cast<int>(l));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

RationalMatrix GradedNilpotent::assemble() const {
    RationalMatrix e(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            e.at(i, n + j) = z.at(i, j);
            e.at(n + i, j) = w.at(i, j);
        }
    return e;
}

namespace {

// dim(W ∩ V^+) or dim(W ∩ V^-) for the coordinate grading of Q^n (+) Q^n;
// also checks that W is graded.
std::pair<int, int> gradedDims(const LinearSubspace& wspace, int n) {
    // dim of the combinations of basis vectors whose complementary half vanishes
    auto halfDim = [&](bool plus) {
        int dimW = wspace.dim();
        RationalMatrix sys(n, dimW);
        for (int j = 0; j < dimW; ++j)
            for (int i = 0; i < n; ++i)
                sys.at(i, j) = wspace.basis()[static_cast<std::size_t>(j)]
                                             [static_cast<std::size_t>(plus ? n + i : i)];
        return kernel_basis(sys).dim();
    };
    return {halfDim(true), halfDim(false)};
}

}  // namespace

SignedYoungDiagram signed_diagram_graded(const GradedNilpotent& e) {
    int n = e.n;
    if (e.z.rows() != n || e.z.cols() != n || e.w.rows() != n || e.w.cols() != n)
        throw std::invalid_argument("signed_diagram_graded: blocks must be n x n");
    RationalMatrix em = e.assemble();

    // kernels of successive powers
    std::vector<LinearSubspace> kernels;  // kernels[l] = ker e^l
    kernels.push_back(LinearSubspace::span(2 * n, {}));
    RationalMatrix power = RationalMatrix::identity(2 * n);
    int top = 0;
    for (int l = 1; l <= 2 * n + 1; ++l) {
        power = power * em;
        kernels.push_back(kernel_basis(power));
        if (kernels.back().dim() == 2 * n) {
            top = l;
            break;
        }
    }
    if (top == 0) throw std::domain_error("signed_diagram_graded: matrix is not nilpotent");
    while (static_cast<int>(kernels.size()) <= top + 1) kernels.push_back(kernels.back());

    auto dims = [&](const LinearSubspace& s) {
        auto [dp, dm] = gradedDims(s, n);
        if (dp + dm != s.dim())
            throw std::logic_error("signed_diagram_graded: subspace is not graded");
        return std::pair<int, int>{dp, dm};
    };

    std::vector<SignedYoungDiagram::Row> rows;
    for (int l = 1; l <= top; ++l) {
        auto [kl_p, kl_m] = dims(kernels[static_cast<std::size_t>(l)]);
        auto [klm1_p, klm1_m] = dims(kernels[static_cast<std::size_t>(l - 1)]);
        auto [ekl1_p, ekl1_m] = dims(apply(em, kernels[static_cast<std::size_t>(l + 1)]));
        auto [ekl_p, ekl_m] = dims(apply(em, kernels[static_cast<std::size_t>(l)]));
        int plusRows = kl_p - klm1_p - ekl1_p + ekl_p;
        int minusRows = kl_m - klm1_m - ekl1_m + ekl_m;
        if (plusRows < 0 || minusRows < 0)
            throw std::logic_error("signed_diagram_graded: negative multiplicity");
        for (int k = 0; k < plusRows; ++k) rows.push_back({l, Sign::Plus});
        for (int k = 0; k < minusRows; ++k) rows.push_back({l, Sign::Minus});
    }
    SignedYoungDiagram d(std::move(rows));
    if (d.totalBoxes() != 2 * n || d.plusCount() != n)
        throw std::logic_error("signed_diagram_graded: signature mismatch");
    return d;
}

}  // namespace dfv
