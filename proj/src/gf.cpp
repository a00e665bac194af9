#include "linclo/gf.hpp"

#include <string>

namespace linclo {

namespace {

constexpr int kMaxFieldOrder = 1024; // dense op tables; desk scale is <= 49

// Polynomial helpers over the prime field Z_r, used only during field
// construction (modulus search and table building). Coefficients lowest
// degree first, normalized.

using ZPoly = std::vector<int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, int r) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % r;
    ztrim(c);
    return c;
}

// Remainder of a by monic b.
ZPoly zmod(ZPoly a, const ZPoly& b, int r) {
    ztrim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            int& c = a[shift + i];
            c = ((c - lead * b[i]) % r + r) % r;
        }
        ztrim(a);
    }
    return a;
}

bool is_irreducible_prime_field(const ZPoly& f, int r) {
    int d = static_cast<int>(f.size()) - 1;
    // trial division by all monic polynomials of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= r;
        for (long long m = 0; m < count; ++m) {
            ZPoly g(e + 1, 0);
            long long t = m;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<int>(t % r);
                t /= r;
            }
            g[e] = 1;
            if (zmod(f, g, r).empty()) return false;
        }
    }
    return true;
}

} // namespace

FieldPtr Field::make(int order) {
    if (order < 2) throw DomainError("NotAPrimePower", "order must be >= 2, got " + std::to_string(order));
    int r = 0;
    for (int c = 2; c * c <= order; ++c) {
        if (order % c == 0) {
            r = c;
            break;
        }
    }
    if (r == 0) r = order; // order itself is prime
    int d = 0;
    int rest = order;
    while (rest % r == 0) {
        rest /= r;
        ++d;
    }
    if (rest != 1)
        throw DomainError("NotAPrimePower",
                          std::to_string(order) + " has more than one prime divisor");
    if (order > kMaxFieldOrder)
        throw GuardError("TooLarge", "field order " + std::to_string(order) +
                                         " exceeds bound " + std::to_string(kMaxFieldOrder));

    auto f = std::shared_ptr<Field>(new Field());
    f->char_ = r;
    f->deg_ = d;
    f->order_ = order;

    if (d == 1) {
        f->modulus_ = {0, 1}; // x
    } else {
        // first monic irreducible in ascending coefficient-tuple order
        long long count = order; // r^d
        for (long long m = 0; m < count; ++m) {
            ZPoly cand(d + 1, 0);
            long long t = m;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(t % r);
                t /= r;
            }
            cand[d] = 1;
            if (is_irreducible_prime_field(cand, r)) {
                f->modulus_ = cand;
                break;
            }
        }
    }

    // multiplication table via polynomial multiplication mod (r, modulus)
    f->mul_.assign(static_cast<size_t>(order) * order, 0);
    f->add_.assign(static_cast<size_t>(order) * order, 0);
    f->neg_.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        auto da = f->digits(a);
        for (int b = 0; b <= a; ++b) {
            auto db = f->digits(b);
            // add
            int s = 0;
            for (int i = d - 1; i >= 0; --i) s = s * r + (da[i] + db[i]) % r;
            f->add_[static_cast<size_t>(a) * order + b] = s;
            f->add_[static_cast<size_t>(b) * order + a] = s;
            // mul
            ZPoly prod = zmul(da, db, r);
            prod = zmod(prod, f->modulus_, r);
            int m = 0;
            for (int i = static_cast<int>(prod.size()) - 1; i >= 0; --i) m = m * r + prod[i];
            f->mul_[static_cast<size_t>(a) * order + b] = m;
            f->mul_[static_cast<size_t>(b) * order + a] = m;
        }
    }
    for (int a = 0; a < order; ++a) {
        int n = 0;
        auto da = f->digits(a);
        for (int i = d - 1; i >= 0; --i) n = n * r + (r - da[i]) % r;
        f->neg_[a] = n;
    }
    f->inv_.assign(order, 0);
    for (int a = 1; a < order; ++a) {
        for (int b = 1; b < order; ++b) {
            if (f->mul(a, b) == 1) {
                f->inv_[a] = b;
                break;
            }
        }
    }

    // smallest encoding of full multiplicative order
    for (int a = 1; a < order; ++a) {
        if (f->mult_order(a) == order - 1) {
            f->primitive_ = a;
            break;
        }
    }
    return f;
}

int Field::inv(int a) const {
    if (a == 0) throw DomainError("DivisionByZero", "inverse of zero");
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

int Field::from_int(long long n) const {
    long long m = n % char_;
    if (m < 0) m += char_;
    return static_cast<int>(m);
}

int Field::mult_order(int a) const {
    if (a == 0) throw DomainError("DivisionByZero", "multiplicative order of zero");
    int ord = 1;
    int x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::vector<int> Field::digits(int enc) const {
    std::vector<int> out(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
        out[i] = enc % char_;
        enc /= char_;
    }
    return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && a->order() == b->order();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b))
        throw DomainError("FieldMismatch", "operands live in different fields");
}

} // namespace linclo
