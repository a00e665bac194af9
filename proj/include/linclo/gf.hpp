#pragma once

#include <memory>
#include <vector>

#include "linclo/error.hpp"

namespace linclo {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_{r^d}. Elements are encoded as integers in [0, order):
/// the base-r digits of the encoding are the coordinates in the polynomial
/// basis, constant term least significant. 0 and 1 encode the additive and
/// multiplicative identities.
///
/// Construction is deterministic: the modulus is the first monic irreducible
/// polynomial of the required degree in ascending coefficient-tuple order
/// (highest non-leading coefficient most significant), and the primitive
/// element is the smallest encoding of full multiplicative order.
///
/// Immutable after construction; all operations are pure.
class Field {
public:
    /// Throws DomainError(NotAPrimePower) if order is not a prime power,
    /// GuardError(TooLarge) beyond desk scale.
    static FieldPtr make(int order);

    int characteristic() const { return char_; }
    int degree() const { return deg_; }
    int order() const { return order_; }

    /// Modulus coefficients over the prime subfield, lowest degree first,
    /// length degree+1, monic. For degree 1 this is x, i.e. {0, 1}.
    const std::vector<int>& modulus() const { return modulus_; }

    int primitive() const { return primitive_; }

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    /// Throws DomainError(DivisionByZero) on a = 0.
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// Embeds n mod characteristic as a prime-subfield scalar.
    int from_int(long long n) const;

    /// Multiplicative order of a nonzero element.
    int mult_order(int a) const;

    /// Base-characteristic digits of an encoding, constant term first.
    std::vector<int> digits(int enc) const;

private:
    Field() = default;

    int char_ = 0;
    int deg_ = 0;
    int order_ = 0;
    int primitive_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_;
    std::vector<int> neg_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

/// Fields are interchangeable iff they have the same order (construction is
/// deterministic, so same order implies identical modulus and primitive).
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Throws DomainError(FieldMismatch) unless same_field(a, b).
void require_same_field(const FieldPtr& a, const FieldPtr& b);

} // namespace linclo
