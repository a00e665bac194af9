#include "linclo/linalg.hpp"

#include <algorithm>

namespace linclo {

Mat::Mat(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, 0) {}

Mat::Mat(FieldPtr field, std::vector<Vec> rows)
    : field_(std::move(field)), rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DomainError("DimensionMismatch", "ragged rows in matrix construction");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(FieldPtr field, int n) {
    Mat m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Mat::row(int i) const {
    return Vec(a_.begin() + static_cast<size_t>(i) * cols_,
               a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

Mat Mat::operator*(const Mat& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw DomainError("DimensionMismatch", "matrix product shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_->add(r.at(i, j), field_->mul(v, o.at(k, j)));
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DomainError("DimensionMismatch", "matrix sum shape mismatch");
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DomainError("DimensionMismatch", "matrix-vector shape mismatch");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[i] = field_->add(r[i], field_->mul(at(i, j), v[j]));
    return r;
}

Mat Mat::pow(int e) const {
    Mat result = identity(field_, rows_);
    Mat base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::scaled(int c) const {
    Mat r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->mul(a_[i], c);
    return r;
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    const auto& f = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        int s = f->inv(a.at(r, c));
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = f->mul(a.at(r, j), s);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            int factor = a.at(i, c);
            for (int j = 0; j < a.cols(); ++j)
                a.at(i, j) = f->sub(a.at(i, j), f->mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

Subspace::Subspace(FieldPtr field, int ambient)
    : field_(std::move(field)), ambient_(ambient) {}

Subspace Subspace::span(FieldPtr field, int ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw DomainError("DimensionMismatch", "spanning vector of wrong dimension");
    Subspace s(field, ambient);
    if (vectors.empty()) return s;
    auto rr = rref(Mat(field, vectors));
    for (size_t i = 0; i < rr.pivots.size(); ++i) s.basis_.push_back(rr.mat.row(static_cast<int>(i)));
    return s;
}

Subspace Subspace::full(FieldPtr field, int ambient) {
    Subspace s(field, ambient);
    for (int i = 0; i < ambient; ++i) {
        Vec e(ambient, 0);
        e[i] = 1;
        s.basis_.push_back(std::move(e));
    }
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DomainError("DimensionMismatch", "vector dimension differs from ambient");
    Vec w = v;
    for (const auto& b : basis_) {
        int pivot = 0;
        while (pivot < ambient_ && b[pivot] == 0) ++pivot;
        if (w[pivot] != 0) {
            int c = w[pivot];
            for (int j = 0; j < ambient_; ++j) w[j] = field_->sub(w[j], field_->mul(c, b[j]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Subspace kernel(const Mat& m) {
    auto rr = rref(m);
    const auto& f = m.field();
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = f->neg(rr.mat.at(static_cast<int>(i), c));
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("DimensionMismatch", "subspace sum with different ambients");
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.field(), a.ambient(), rows);
}

Mat annihilator(const Subspace& s) {
    if (s.dim() == 0) return Mat::identity(s.field(), s.ambient());
    // functionals vanishing on s = kernel of the basis matrix
    Subspace k = kernel(Mat(s.field(), s.basis()));
    if (k.dim() == 0) return Mat(s.field(), 0, s.ambient());
    return Mat(s.field(), k.basis());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("DimensionMismatch", "subspace intersection with different ambients");
    Mat na = annihilator(a);
    Mat nb = annihilator(b);
    std::vector<Vec> rows;
    for (int i = 0; i < na.rows(); ++i) rows.push_back(na.row(i));
    for (int i = 0; i < nb.rows(); ++i) rows.push_back(nb.row(i));
    if (rows.empty()) return Subspace::full(a.field(), a.ambient());
    return kernel(Mat(a.field(), rows));
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DomainError("DimensionMismatch", "subspace comparison with different ambients");
    for (const auto& v : a.basis())
        if (!b.contains(v)) return false;
    return true;
}

std::optional<Vec> express_in_span(const std::vector<Vec>& vectors, const Vec& target,
                                   const FieldPtr& field) {
    int n = static_cast<int>(target.size());
    int k = static_cast<int>(vectors.size());
    // augmented system: columns are the vectors, last column the target
    Mat aug(field, n, k + 1);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(vectors[j].size()) != n)
            throw DomainError("DimensionMismatch", "spanning vector of wrong dimension");
        for (int i = 0; i < n; ++i) aug.at(i, j) = vectors[j][i];
    }
    for (int i = 0; i < n; ++i) aug.at(i, k) = target[i];
    auto rr = rref(aug);
    Vec coeffs(k, 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == k) return std::nullopt; // inconsistent
        coeffs[rr.pivots[i]] = rr.mat.at(static_cast<int>(i), k);
    }
    return coeffs;
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int dim) {
    std::vector<Subspace> out;
    out.emplace_back(field, dim); // zero subspace
    int p = field->order();
    for (int rank = 1; rank <= dim; ++rank) {
        // choose pivot columns
        std::vector<int> piv(rank);
        for (int i = 0; i < rank; ++i) piv[i] = i;
        while (true) {
            // free positions: non-pivot columns to the right of each pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_pivot(dim, false);
            for (int c : piv) is_pivot[c] = true;
            for (int i = 0; i < rank; ++i)
                for (int c = piv[i] + 1; c < dim; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);
            unsigned long long total = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
            for (unsigned long long m = 0; m < total; ++m) {
                std::vector<Vec> rows(rank, Vec(dim, 0));
                for (int i = 0; i < rank; ++i) rows[i][piv[i]] = 1;
                unsigned long long t = m;
                for (const auto& [ri, ci] : free_pos) {
                    rows[ri][ci] = static_cast<int>(t % p);
                    t /= p;
                }
                out.push_back(Subspace::span(field, dim, rows));
            }
            // next pivot combination
            int i = rank - 1;
            while (i >= 0 && piv[i] == dim - rank + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < rank; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

unsigned long long count_all_subspaces(int order, int dim) {
    // sum over ranks of the Gaussian binomials [dim choose r]_order, via the
    // Pascal-style recurrence G(n,k) = G(n-1,k-1) + order^k G(n-1,k),
    // saturating so oversized inputs still compare correctly against guards
    constexpr unsigned long long kCap = 1ull << 62;
    auto sat_mul = [](unsigned long long a, unsigned long long b) {
        if (a != 0 && b > kCap / a) return kCap;
        return a * b;
    };
    auto sat_add = [](unsigned long long a, unsigned long long b) {
        return (a > kCap - b) ? kCap : a + b;
    };
    std::vector<unsigned long long> g(dim + 1, 0);
    g[0] = 1;
    for (int n = 1; n <= dim; ++n) {
        std::vector<unsigned long long> next(dim + 1, 0);
        next[0] = 1;
        unsigned long long qk = 1;
        for (int k = 1; k <= n; ++k) {
            qk = sat_mul(qk, order);
            next[k] = sat_add(g[k - 1], sat_mul(qk, g[k]));
        }
        g = std::move(next);
    }
    unsigned long long total = 0;
    for (int k = 0; k <= dim; ++k) total = sat_add(total, g[k]);
    return total;
}

} // namespace linclo
