#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "ghkit/gh_matrix.hpp"
#include "ghkit/linear.hpp"

namespace ghkit {

// Exact nonnegative rational, kept reduced.  Used for dimensions measured
// in GF(q) units that need not be integral (d/e).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

// An unstructured block code: a set of words of fixed length over GF(q),
// stored sorted (deterministic) with a hashed membership index.
class Code {
public:
    static Code from_words(FieldPtr field, int length, std::vector<Word> words);

    const FieldPtr& field() const { return field_; }
    int length() const { return length_; }
    size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;
    bool contains_key(const std::string& key) const { return keys_.count(key) > 0; }

private:
    Code() = default;
    FieldPtr field_;
    int length_ = 0;
    std::vector<Word> words_;
    std::unordered_set<std::string> keys_;
};

// Row set of a valid GH matrix (n distinct words).
Code f_code(const GhMatrix& M);

// Union of the row set and its q constant translates; requires a normalized
// matrix so that the zero word is a row.  Always has q*n words.
Code c_code(const GhMatrix& M);

// GF(q)-linear span of the code, as a canonical RREF basis.
LinearBasis span_basis(const Code& C);
int rank_q(const Code& C);

// Expand a word coordinatewise into e GF(p) digits (basis {1, x, ..., x^{e-1}}).
Word expand_to_prime(const Field& f, const Word& w);

// GF(p)-linear span of the coordinatewise expansion.
LinearBasis span_basis_p(const Code& C);
int rank_p(const Code& C);

// Kernel K(C) = {x in C : a*x + c in C for all a in GF(q), c in C}, a linear
// subspace, returned as an RREF basis over GF(q).  kernel_q uses the OpenMP
// candidate filter, kernel_q_serial the serial reference.
LinearBasis kernel_q(const Code& C);
LinearBasis kernel_q_serial(const Code& C);
int ker_q(const Code& C);

// p-kernel {x : x + C = C}, an additive (GF(p)-linear) subcode, returned as
// a GF(p) basis of its coordinatewise expansion.
LinearBasis kernel_p(const Code& C);
int ker_p(const Code& C);
// The same dimension measured in GF(q) units: ker_p / e, possibly fractional.
Rational ker_p_q_units(const Code& C);

// Dual of the linear span, as an RREF basis (dimension n - rank_q).
LinearBasis dual_basis(const Code& C);

// True iff span(C) is contained in its dual (all pairwise inner products of
// basis vectors vanish).
bool is_self_orthogonal(const Code& C);

// Self-orthogonal, rank exactly length/2, and C itself linear — together
// these make C equal its dual rather than merely span it.
bool is_self_dual(const Code& C);

struct SubfieldAdditivity {
    bool additive = false;
    Rational dim; // log_q |C| when additive; an integer multiple of 1/e
};

// Is C closed under addition and under scalars from the subfield
// GF(p^sub_degree)?  sub_degree must divide e (sub_degree == e tests
// GF(q)-linearity).
SubfieldAdditivity is_subfield_additive(const Code& C, int sub_degree);

// Restrict every word to the coordinates where v equals 1, for v a kernel
// element outside span{1}.  Each restricted word arises from exactly q
// words of C, so the result has |C|/q words of length n/q.
Code puncture_by_kernel(const Code& C, const Word& v);

// Minimum Hamming distance over all pairs (|C| >= 2).  min_distance uses
// the OpenMP pair scan, min_distance_serial the serial reference.
int min_distance(const Code& C);
int min_distance_serial(const Code& C);

// Does C have the shape of a GH code: the zero word present, closure under
// constant translates, and the words with first coordinate zero forming a
// valid GH matrix of order |C|/q?
bool is_gh_code(const Code& C);

// The GH matrix underlying a GH code: its words with first coordinate zero,
// in lexicographic order.  Errors if C is not a GH code.
GhMatrix gh_code_matrix(const Code& C);

} // namespace ghkit
