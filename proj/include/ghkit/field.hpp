#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ghkit {

// Element of GF(p^e), encoded as an integer in [0, q): the base-p digits of
// the code are the coefficients of the element over the basis {1, x, ..., x^{e-1}}.
using Elem = std::uint16_t;

// A length-n vector over the field.
using Word = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^e) with arithmetic backed by log/antilog tables (q <= 2^16).
//
// The multiplicative generator omega is the residue class of x for e > 1
// (the defining polynomial is primitive, so x generates), and the least
// primitive root mod p for e = 1.  The canonical element order is
// [0, 1, omega, omega^2, ..., omega^{q-2}].
class Field {
public:
    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Monic primitive defining polynomial, little-endian (constant term first),
    // length e+1.  For e = 1 this is x - g with g the least primitive root.
    const std::vector<int>& poly() const { return poly_; }

    // [0, 1, omega, omega^2, ..., omega^{q-2}]; a permutation of [0, q).
    const std::vector<Elem>& elem_order() const { return elem_order_; }

    Elem omega() const { return omega_; }

    Elem add(Elem a, Elem b) const {
        if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return antilog_[s];
    }
    // Multiplicative inverse; a = 0 is an error.
    Elem inv(Elem a) const;
    // a^k for integer k (k < 0 requires a != 0; 0^0 = 1).
    Elem pow(Elem a, long long k) const;

    // Discrete log base omega; a = 0 is an error.
    int log(Elem a) const;

    // sum of x^2 over all field elements: 1 for q=2, 2 for q=3, 0 otherwise.
    Elem sum_of_squares() const;

    bool same_as(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && poly_ == o.poly_;
    }

private:
    friend FieldPtr field_new(int, int);
    friend FieldPtr field_new(int, int, const std::vector<int>&);
    friend FieldPtr prime_subfield(const Field&);
    Field(int p, int e, std::vector<int> poly);

    Elem add_slow(Elem a, Elem b) const;

    int p_, e_, q_;
    std::vector<int> poly_;
    Elem omega_;
    std::vector<Elem> elem_order_;
    std::vector<Elem> antilog_;   // antilog_[i] = omega^i, i in [0, q-1)
    std::vector<int> log_;        // log_[a] for a != 0
    std::vector<Elem> neg_table_;
    std::vector<Elem> add_table_; // q*q, only built for small q
};

// Construct GF(p^e) from the built-in table of primitive polynomials
// (covers q in {2,3,4,5,7,8,9,11,13,16,25,27}); errors otherwise.
FieldPtr field_new(int p, int e);

// Construct GF(p^e) with an explicit monic primitive polynomial,
// little-endian, length e+1.  Errors if the polynomial is not primitive.
FieldPtr field_new(int p, int e, const std::vector<int>& poly);

// GF(p) for the characteristic of f (degree-1 defining polynomial computed
// on demand for any prime).  Used as the scalar field of GF(p)-bases.
FieldPtr prime_subfield(const Field& f);

} // namespace ghkit
