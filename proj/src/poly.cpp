#include "linclo/poly.hpp"

#include <algorithm>
#include <map>

namespace linclo {

Poly::Poly(FieldPtr field, std::vector<int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    int s = field_->inv(leading());
    std::vector<int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = field_->mul(coeffs_[i], s);
    return Poly(field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    std::vector<int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    std::vector<int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = f->add(c[i + j], f->mul(a.coeffs_[i], b.coeffs_[j]));
    return Poly(f, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    const auto& f = a.field();
    std::vector<int> rem = a.coeffs();
    int db = b.degree();
    int lead_inv = f->inv(b.leading());
    std::vector<int> quot(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        int q = f->mul(rem[i], lead_inv);
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = f->sub(rem[i - db + j], f->mul(q, b.coeff(j)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_divides(const Poly& d, const Poly& f) {
    if (d.is_zero()) return f.is_zero();
    return poly_mod(f, d).is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_powmod(const Poly& a, long long e, const Poly& m) {
    Poly base = poly_mod(a, m);
    Poly result = Poly::one(a.field());
    while (e > 0) {
        if (e & 1) result = poly_mod(result * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return result;
}

int poly_eval(const Poly& a, int x) {
    const auto& f = a.field();
    int acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = f->add(f->mul(acc, x), a.coeff(i));
    return acc;
}

Poly poly_derivative(const Poly& a) {
    const auto& f = a.field();
    if (a.degree() < 1) return Poly::zero(f);
    std::vector<int> c(a.degree(), 0);
    for (int i = 1; i <= a.degree(); ++i)
        c[i - 1] = f->mul(f->from_int(i), a.coeff(i));
    return Poly(f, std::move(c));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

Poly Factorization::expand() const {
    Poly out = Poly::constant(field, unit);
    for (const auto& [p, k] : factors)
        for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

namespace {

// x^(order^(degree-1)) is the inverse of Frobenius, so this is the
// order-th root of a coefficient; with f' = 0 only coefficients at
// char-multiples are nonzero.
Poly char_root(const Poly& f) {
    const auto& fld = f.field();
    int r = fld->characteristic();
    std::vector<int> c(f.degree() / r + 1, 0);
    long long exp = 1;
    for (int i = 0; i < fld->degree() - 1; ++i) exp *= fld->characteristic();
    for (int j = 0; j * r <= f.degree(); ++j)
        c[j] = fld->pow(f.coeff(j * r), exp);
    return Poly(fld, std::move(c));
}

// squarefree decomposition of monic f; emits (squarefree part, multiplicity)
void squarefree_decompose(const Poly& f, int mult,
                          std::vector<std::pair<Poly, int>>& out) {
    const auto& fld = f.field();
    int r = fld->characteristic();
    Poly d = poly_derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(char_root(f), mult * r, out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = poly_divmod(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, mult * i);
        ++i;
        w = y;
        c = poly_divmod(c, y).first;
    }
    if (!c.is_one()) squarefree_decompose(char_root(c), mult * r, out);
}

// deterministic equal-degree splitting of a squarefree product of
// irreducibles of degree k
void edf(const Poly& f, int k, std::vector<Poly>& out) {
    if (f.degree() == k) {
        out.push_back(f);
        return;
    }
    const auto& fld = f.field();
    long long s = fld->order();
    int deg = f.degree();
    // iterate candidates h of degree 1..deg-1 in encoding order
    for (int hd = 1; hd < deg; ++hd) {
        long long count = 1;
        for (int i = 0; i <= hd; ++i) count *= s;
        for (long long m = s; m < count; ++m) { // m >= s ensures degree >= 1 terms present
            std::vector<int> hc(hd + 1, 0);
            long long t = m;
            for (int i = 0; i <= hd; ++i) {
                hc[i] = static_cast<int>(t % s);
                t /= s;
            }
            Poly h(fld, std::move(hc));
            if (h.degree() < 1) continue;
            Poly g = Poly::zero(fld);
            if (fld->characteristic() == 2) {
                // trace map to F_2
                int bits = fld->degree() * k;
                Poly tr = poly_mod(h, f);
                Poly pw = tr;
                for (int i = 1; i < bits; ++i) {
                    pw = poly_mod(pw * pw, f);
                    tr = tr + pw;
                }
                g = poly_gcd(tr, f);
            } else {
                long long e = 1;
                for (int i = 0; i < k; ++i) e *= s;
                e = (e - 1) / 2;
                Poly u = poly_powmod(h, e, f);
                g = poly_gcd(u - Poly::one(fld), f);
            }
            if (g.degree() > 0 && g.degree() < deg) {
                edf(g, k, out);
                edf(poly_divmod(f, g).first, k, out);
                return;
            }
        }
    }
    // unreachable for a genuine product of distinct irreducibles
    throw std::logic_error("equal-degree splitting found no separating candidate");
}

// distinct-degree factorization of squarefree monic f
void ddf(const Poly& f, std::vector<Poly>& out) {
    const auto& fld = f.field();
    Poly rest = f;
    Poly h = poly_mod(Poly::x(fld), rest);
    int k = 0;
    while (rest.degree() > 0 && 2 * (k + 1) <= rest.degree()) {
        ++k;
        h = poly_powmod(h, fld->order(), rest);
        Poly g = poly_gcd(h - Poly::x(fld), rest);
        if (g.degree() > 0) {
            edf(g, k, out);
            rest = poly_divmod(rest, g).first;
            h = poly_mod(h, rest);
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
}

} // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw DomainError("ZeroPolynomial", "cannot factor the zero polynomial");
    Factorization result;
    result.field = f.field();
    result.unit = f.leading();
    if (f.degree() == 0) return result;

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    std::map<std::vector<int>, std::pair<Poly, int>> acc;
    for (const auto& [part, mult] : squarefree) {
        std::vector<Poly> irreducibles;
        ddf(part, irreducibles);
        for (const auto& p : irreducibles) {
            auto it = acc.find(p.coeffs());
            if (it == acc.end())
                acc.emplace(p.coeffs(), std::make_pair(p, mult));
            else
                it->second.second += mult;
        }
    }
    for (auto& [key, val] : acc) result.factors.push_back(val);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

Poly target_poly(const FieldPtr& p_field, const FieldPtr& q_field) {
    if (p_field->characteristic() == q_field->characteristic())
        throw DomainError("SameCharacteristic",
                          "p and q must be powers of different primes (both have characteristic " +
                              std::to_string(p_field->characteristic()) + ")");
    int d = q_field->order() - 1;
    std::vector<int> c(d + 1, 0);
    c[0] = p_field->neg(1);
    c[d] = 1;
    return Poly(p_field, std::move(c));
}

std::string poly_to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0 && p.degree() > 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(p.coeff(i));
        } else {
            if (p.coeff(i) != 1) out += std::to_string(p.coeff(i)) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::string poly_to_pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        int c = p.coeff(i);
        if (c == 0 && p.degree() > 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::string factorization_to_text(const Factorization& f) {
    std::string out;
    if (f.unit != 1 || f.factors.empty()) out = std::to_string(f.unit);
    for (const auto& [p, k] : f.factors) {
        if (!out.empty()) out += " * ";
        out += "(" + poly_to_pretty(p) + ")^" + std::to_string(k);
    }
    return out;
}

} // namespace linclo
