#ifndef SURFW_LINALG_HPP
#define SURFW_LINALG_HPP

#include "surfw/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfw {

/// Dense exact-rational matrix; vectors are columns, so a matrix maps
/// Q^cols -> Q^rows.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
    static Mat identity(int n);

    Rat& at(int i, int j) { return a[size_t(i) * size_t(cols) + size_t(j)]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * size_t(cols) + size_t(j)]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Rat& c) const;
    Mat transpose() const;
    std::string str() const;
};

/// Gauss-Jordan; returns reduced row echelon form and pivot columns.
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr);
int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// power with exact arithmetic; k >= 0
Mat mat_pow(const Mat& m, int k);

/// Basis of the kernel, one column per basis vector.
Mat kernel_basis(const Mat& m);
/// Reduced basis of the column span.
Mat column_space(const Mat& m);
/// span(A) + span(B), reduced column basis; A, B have equal rows.
Mat space_sum(const Mat& A, const Mat& B);
/// span(A) n span(B), reduced column basis.
Mat space_intersect(const Mat& A, const Mat& B);
/// span(A) subset of span(B)?
bool space_leq(const Mat& A, const Mat& B);
bool space_eq(const Mat& A, const Mat& B);
/// Solves M X = B exactly; nullopt when inconsistent.  When the system is
/// underdetermined an arbitrary solution is returned.
std::optional<Mat> solve(const Mat& M, const Mat& B);

} // namespace surfw

#endif
