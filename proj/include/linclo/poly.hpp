#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linclo/gf.hpp"

namespace linclo {

/// Dense univariate polynomial over a Field. Coefficients lowest degree
/// first, no trailing zeros; the zero polynomial has an empty coefficient
/// list and degree -1.
class Poly {
public:
    Poly(FieldPtr field, std::vector<int> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
    static Poly x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
    static Poly constant(FieldPtr field, int c) { return Poly(std::move(field), {c}); }

    const FieldPtr& field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    int leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    Poly monic() const;

    bool operator==(const Poly& o) const {
        return field_->order() == o.field_->order() && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    FieldPtr field_;
    std::vector<int> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& f);

/// Monic gcd; gcd(0, 0) = 0. Throws DomainError(FieldMismatch) across fields.
Poly poly_gcd(const Poly& a, const Poly& b);

/// a^e mod m (e >= 0, m nonconstant).
Poly poly_powmod(const Poly& a, long long e, const Poly& m);

int poly_eval(const Poly& a, int x);
Poly poly_derivative(const Poly& a);

/// Canonical order: by degree, then by coefficient tuple from the highest
/// non-leading coefficient down.
bool poly_less(const Poly& a, const Poly& b);

/// Complete factorization into monic irreducibles. Factors sorted in
/// canonical order; unit * product of factor powers reconstructs the input.
struct Factorization {
    FieldPtr field;
    int unit = 1;
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
};

/// Squarefree decomposition, then distinct-degree and deterministic
/// equal-degree splitting (trace maps in characteristic 2, candidate
/// polynomials in encoding order otherwise).
/// Throws DomainError(ZeroPolynomial) on the zero polynomial.
Factorization factor(const Poly& f);

/// x^{q-1} - 1 over the p-side field; throws DomainError(SameCharacteristic)
/// unless the two characteristics differ.
Poly target_poly(const FieldPtr& p_field, const FieldPtr& q_field);

/// `c0 + c1*x + ... + ck*x^k` with integer coefficient encodings.
std::string poly_to_text(const Poly& p);

/// Descending-power display like `x^2+x+1`, used for factor rendering.
std::string poly_to_pretty(const Poly& p);
std::string factorization_to_text(const Factorization& f);

} // namespace linclo
