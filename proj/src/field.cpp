#include "ghkit/field.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ghkit {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Built-in primitive polynomials (Conway polynomials) for the supported
// prime powers with e > 1.  Little-endian, monic.
const std::map<std::pair<int, int>, std::vector<int>> kPolyTable = {
    {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
    {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
    {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
    {{3, 2}, {2, 2, 1}},       // x^2 + 2x + 2
    {{3, 3}, {1, 2, 0, 1}},    // x^3 + 2x + 1
    {{5, 2}, {2, 4, 1}},       // x^2 + 4x + 2
};

int mul_order_mod(int a, int p) {
    int x = a % p, ord = 1;
    while (x != 1) {
        x = int((long long)x * a % p);
        ++ord;
    }
    return ord;
}

int least_primitive_root(int p) {
    if (p == 2) return 1;
    for (int g = 2; g < p; ++g)
        if (mul_order_mod(g, p) == p - 1) return g;
    throw std::logic_error("no primitive root found mod " + std::to_string(p));
}

} // namespace

Field::Field(int p, int e, std::vector<int> poly) : p_(p), e_(e), poly_(std::move(poly)) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
    }
    q_ = int(q);
    if ((int)poly_.size() != e + 1)
        throw std::invalid_argument("defining polynomial must have degree e (e+1 coefficients)");
    if (poly_[e] != 1) throw std::invalid_argument("defining polynomial must be monic");
    for (int c : poly_)
        if (c < 0 || c >= p) throw std::invalid_argument("polynomial coefficient out of range [0, p)");

    neg_table_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int x = a, out = 0, place = 1;
        for (int i = 0; i < e_; ++i) {
            out += ((p_ - x % p_) % p_) * place;
            x /= p_;
            place *= p_;
        }
        neg_table_[a] = Elem(out);
    }
    if (q_ <= 1024) {
        add_table_.resize(size_t(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                add_table_[size_t(a) * q_ + b] = add_slow(Elem(a), Elem(b));
    }

    // Multiply by the residue of x, reducing with the defining polynomial:
    // shift digits up one place, then cancel the overflow via x^e = -poly_tail.
    auto mul_x = [&](int a) {
        int digits[18] = {0};
        for (int i = 0; i < e_; ++i) {
            digits[i + 1] = a % p_;
            a /= p_;
        }
        int carry = digits[e_];
        if (carry) {
            for (int i = 0; i < e_; ++i)
                digits[i] = (digits[i] + (p_ - poly_[i]) % p_ * carry) % p_;
        }
        int out = 0;
        for (int i = e_ - 1; i >= 0; --i) out = out * p_ + digits[i];
        return out;
    };

    omega_ = (e_ == 1) ? Elem((p_ - poly_[0]) % p_) : Elem(p_);
    if (q_ == 2) omega_ = 1;
    auto mul_omega = [&](int a) {
        return (e_ == 1) ? int((long long)a * omega_ % p_) : mul_x(a);
    };

    antilog_.resize(q_ - 1);
    log_.assign(q_, -1);
    int x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        if (x == 0 || log_[x] != -1)
            throw std::invalid_argument("defining polynomial is not primitive");
        antilog_[i] = Elem(x);
        log_[x] = i;
        x = mul_omega(x);
    }
    // closing the cycle: omega^{q-1} must return to 1
    if (x != 1)
        throw std::invalid_argument("defining polynomial is not primitive");

    elem_order_.resize(q_);
    elem_order_[0] = 0;
    for (int i = 0; i < q_ - 1; ++i) elem_order_[i + 1] = antilog_[i];
}

Elem Field::add_slow(Elem a, Elem b) const {
    int x = a, y = b, out = 0, place = 1;
    for (int i = 0; i < e_; ++i) {
        out += (x % p_ + y % p_) % p_ * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return Elem(out);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    int l = (q_ - 1 - log_[a]) % (q_ - 1);
    return antilog_[l];
}

int Field::log(Elem a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
}

Elem Field::pow(Elem a, long long k) const {
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;
        throw std::invalid_argument("negative power of zero");
    }
    long long m = q_ - 1;
    long long l = (log_[a] % m) * (k % m) % m;
    if (l < 0) l += m;
    return antilog_[l];
}

Elem Field::sum_of_squares() const {
    Elem s = 0;
    for (int x = 0; x < q_; ++x) s = add(s, mul(Elem(x), Elem(x)));
    return s;
}

FieldPtr field_new(int p, int e, const std::vector<int>& poly) {
    return FieldPtr(new Field(p, e, poly));
}

FieldPtr field_new(int p, int e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (e == 1) {
        int g = least_primitive_root(p);
        return field_new(p, 1, {(p - g) % p, 1});
    }
    auto it = kPolyTable.find({p, e});
    if (it == kPolyTable.end())
        throw std::invalid_argument("no built-in defining polynomial for GF(" + std::to_string(p) + "^" +
                                    std::to_string(e) + "); pass one explicitly");
    return field_new(p, e, it->second);
}

FieldPtr prime_subfield(const Field& f) {
    return field_new(f.p(), 1);
}

} // namespace ghkit
