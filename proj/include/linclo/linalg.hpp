#pragma once

#include <optional>
#include <vector>

#include "linclo/gf.hpp"

namespace linclo {

/// Dense vector of field-element encodings.
using Vec = std::vector<int>;

/// Dense rows x cols matrix over a Field.
class Mat {
public:
    Mat(FieldPtr field, int rows, int cols);
    Mat(FieldPtr field, std::vector<Vec> rows);
    static Mat identity(FieldPtr field, int n);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Vec row(int i) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    /// Matrix-vector product M·v.
    Vec apply(const Vec& v) const;
    Mat pow(int e) const;
    Mat transpose() const;
    Mat scaled(int c) const;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<int> a_;
};

struct RrefResult {
    Mat mat;
    std::vector<int> pivots;
};

/// Reduced row echelon form; rank = |pivots|.
RrefResult rref(const Mat& m);

/// Canonical subspace of F^d: the basis rows are the RREF of any generating
/// set, so two subspaces are equal iff their basis arrays are identical.
class Subspace {
public:
    /// The zero subspace.
    Subspace(FieldPtr field, int ambient);
    static Subspace span(FieldPtr field, int ambient, const std::vector<Vec>& vectors);
    static Subspace full(FieldPtr field, int ambient);

    const FieldPtr& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const {
        if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
        return basis_ < o.basis_;
    }

private:
    FieldPtr field_;
    int ambient_;
    std::vector<Vec> basis_;
};

/// Null space {x : m x = 0}, canonical.
Subspace kernel(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Computed as the kernel of the stacked annihilator constraints of the
/// two operands.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// True iff every basis row of a lies in b.
bool subspace_leq(const Subspace& a, const Subspace& b);

/// Matrix whose rows are a basis of the functionals vanishing on s
/// (under the standard bilinear form); kernel(annihilator(s)) == s.
Mat annihilator(const Subspace& s);

/// Coefficients c with sum c_i vectors_i = target, if solvable.
std::optional<Vec> express_in_span(const std::vector<Vec>& vectors, const Vec& target,
                                   const FieldPtr& field);

/// All subspaces of F^dim by rank-by-rank RREF enumeration.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int dim);

/// Total number of subspaces of F_order^dim (sum of Gaussian binomials).
unsigned long long count_all_subspaces(int order, int dim);

} // namespace linclo
