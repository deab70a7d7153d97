#include "surfw/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace surfw {

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const
{
    for (const auto& v : a)
        if (!surfw::is_zero(v)) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const
{
    if (cols != o.rows) throw std::invalid_argument("Mat::mul: shape mismatch");
    Mat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& v = at(i, k);
            if (surfw::is_zero(v)) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Rat& w = o.at(k, j);
                if (!surfw::is_zero(w)) out.at(i, j) += v * w;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const
{
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat::add: shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const
{
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat::sub: shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
}

Mat Mat::operator*(const Rat& c) const
{
    Mat out = *this;
    for (auto& v : out.a) v *= c;
    return out;
}

Mat Mat::transpose() const
{
    Mat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::string Mat::str() const
{
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << rat_str(at(i, j));
    }
    os << "]";
    return os.str();
}

Mat rref(const Mat& m, std::vector<int>* pivots)
{
    Mat r = m;
    if (pivots) pivots->clear();
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (!surfw::is_zero(r.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = Rat(1) / r.at(lead, col);
        for (int j = 0; j < r.cols; ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            Rat f = r.at(i, col);
            if (surfw::is_zero(f)) continue;
            for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return r;
}

int rank(const Mat& m)
{
    std::vector<int> piv;
    rref(m, &piv);
    return int(piv.size());
}

std::optional<Mat> inverse(const Mat& m)
{
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    if (int(piv.size()) != n || piv[size_t(n) - 1] >= n) {
        // check the left block is the identity
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r.at(i, j) != Rat(i == j ? 1 : 0)) return std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.at(i, j) != Rat(i == j ? 1 : 0)) return std::nullopt;
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = r.at(i, n + j);
    return out;
}

Mat mat_pow(const Mat& m, int k)
{
    if (m.rows != m.cols) throw std::invalid_argument("mat_pow: square required");
    Mat out = Mat::identity(m.rows);
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

Mat kernel_basis(const Mat& m)
{
    std::vector<int> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_pivot(size_t(m.cols), false);
    for (int p : piv) is_pivot[size_t(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j)
        if (!is_pivot[size_t(j)]) free_cols.push_back(j);
    Mat out(m.cols, int(free_cols.size()));
    for (int k = 0; k < int(free_cols.size()); ++k) {
        int fc = free_cols[size_t(k)];
        out.at(fc, k) = 1;
        for (int i = 0; i < int(piv.size()); ++i) out.at(piv[size_t(i)], k) = -r.at(i, fc);
    }
    return out;
}

Mat column_space(const Mat& m)
{
    // RREF of the transpose: rows of the result span the column space
    Mat rt = rref(m.transpose());
    int rk = 0;
    for (int i = 0; i < rt.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < rt.cols; ++j)
            if (!surfw::is_zero(rt.at(i, j))) { nz = true; break; }
        if (nz) ++rk;
    }
    Mat out(m.rows, rk);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < m.rows; ++j) out.at(j, i) = rt.at(i, j);
    return out;
}

Mat space_sum(const Mat& A, const Mat& B)
{
    if (A.rows != B.rows) throw std::invalid_argument("space_sum: ambient mismatch");
    Mat join(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) join.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) join.at(i, A.cols + j) = B.at(i, j);
    }
    return column_space(join);
}

Mat space_intersect(const Mat& A, const Mat& B)
{
    if (A.rows != B.rows) throw std::invalid_argument("space_intersect: ambient mismatch");
    // solve A x = B y; kernel of [A | -B]
    Mat join(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) join.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) join.at(i, A.cols + j) = -B.at(i, j);
    }
    Mat ker = kernel_basis(join);
    Mat xpart(A.cols, ker.cols);
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < ker.cols; ++j) xpart.at(i, j) = ker.at(i, j);
    return column_space(A * xpart);
}

bool space_leq(const Mat& A, const Mat& B)
{
    if (A.cols == 0) return true;
    Mat sum = space_sum(A, B);
    return rank(sum) == rank(B);
}

bool space_eq(const Mat& A, const Mat& B)
{
    return rank(A) == rank(B) && space_leq(A, B);
}

std::optional<Mat> solve(const Mat& M, const Mat& B)
{
    if (M.rows != B.rows) throw std::invalid_argument("solve: shape mismatch");
    Mat aug(M.rows, M.cols + B.cols);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        for (int j = 0; j < B.cols; ++j) aug.at(i, M.cols + j) = B.at(i, j);
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    for (int p : piv)
        if (p >= M.cols) return std::nullopt; // inconsistent row
    Mat X(M.cols, B.cols);
    for (int i = 0; i < int(piv.size()); ++i)
        for (int j = 0; j < B.cols; ++j) X.at(piv[size_t(i)], j) = r.at(i, M.cols + j);
    return X;
}

} // namespace surfw
