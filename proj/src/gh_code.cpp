#include "ghkit/gh_code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ghkit/word_key.hpp"

namespace ghkit {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den <= 0 || num < 0) throw std::invalid_argument("rational out of range");
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Code Code::from_words(FieldPtr field, int length, std::vector<Word> words) {
    Code c;
    c.field_ = std::move(field);
    c.length_ = length;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const Word& w : words) {
        if ((int)w.size() != length) throw std::invalid_argument("word length does not match code length");
        for (Elem x : w)
            if (x >= c.field_->q()) throw std::invalid_argument("word entry out of range [0, q)");
        c.keys_.insert(word_key(w));
    }
    c.words_ = std::move(words);
    return c;
}

bool Code::contains(const Word& w) const { return keys_.count(word_key(w)) > 0; }

Code f_code(const GhMatrix& M) {
    M.ensure_valid();
    std::vector<Word> rows;
    rows.reserve(M.n());
    for (int i = 0; i < M.n(); ++i) rows.push_back(M.row_word(i));
    return Code::from_words(M.field(), M.n(), std::move(rows));
}

Code c_code(const GhMatrix& M) {
    M.ensure_valid();
    if (!is_normalized(M)) throw std::invalid_argument("c_code needs a normalized matrix");
    const Field& f = *M.field();
    int n = M.n(), q = f.q();
    std::vector<Word> out;
    out.reserve(size_t(q) * n);
    for (int i = 0; i < n; ++i) {
        Word r = M.row_word(i);
        for (int a = 0; a < q; ++a) {
            Word t(n);
            for (int s = 0; s < n; ++s) t[s] = f.add(r[s], Elem(a));
            out.push_back(std::move(t));
        }
    }
    return Code::from_words(M.field(), n, std::move(out));
}

LinearBasis span_basis(const Code& C) {
    RrefBuilder rb(C.field(), C.length());
    for (const Word& w : C.words()) {
        if (rb.dim() == C.length()) break;
        rb.insert(w);
    }
    return rb.take();
}

int rank_q(const Code& C) { return span_basis(C).dim(); }

Word expand_to_prime(const Field& f, const Word& w) {
    Word out;
    out.reserve(w.size() * f.e());
    for (Elem c : w) {
        int x = c;
        for (int i = 0; i < f.e(); ++i) {
            out.push_back(Elem(x % f.p()));
            x /= f.p();
        }
    }
    return out;
}

LinearBasis span_basis_p(const Code& C) {
    const Field& f = *C.field();
    RrefBuilder rb(prime_subfield(f), C.length() * f.e());
    for (const Word& w : C.words()) {
        if (rb.dim() == C.length() * f.e()) break;
        rb.insert(expand_to_prime(f, w));
    }
    return rb.take();
}

int rank_p(const Code& C) { return span_basis_p(C).dim(); }

namespace {

// Does x satisfy a*x + c in C for every scalar a and codeword c?  All
// scalars are tested explicitly (no generator shortcut).
bool kernel_member(const Code& C, const Word& x, Word& ax, Word& t) {
    const Field& f = *C.field();
    int q = f.q(), n = C.length();
    for (int a = 0; a < q; ++a) {
        for (int s = 0; s < n; ++s) ax[s] = f.mul(Elem(a), x[s]);
        for (const Word& c : C.words()) {
            for (int s = 0; s < n; ++s) t[s] = f.add(ax[s], c[s]);
            if (!C.contains_key(word_key(t))) return false;
        }
    }
    return true;
}

LinearBasis kernel_from_flags(const Code& C, const std::vector<char>& flags) {
    RrefBuilder rb(C.field(), C.length());
    for (size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) rb.insert(C.words()[i]);
    return rb.take();
}

} // namespace

LinearBasis kernel_q(const Code& C) {
    const auto& words = C.words();
    std::vector<char> flags(words.size(), 0);
    long long m = (long long)words.size();
#pragma omp parallel
    {
        Word ax(C.length()), t(C.length());
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < m; ++i) flags[i] = kernel_member(C, words[i], ax, t);
    }
    return kernel_from_flags(C, flags);
}

LinearBasis kernel_q_serial(const Code& C) {
    const auto& words = C.words();
    std::vector<char> flags(words.size(), 0);
    Word ax(C.length()), t(C.length());
    for (size_t i = 0; i < words.size(); ++i) flags[i] = kernel_member(C, words[i], ax, t);
    return kernel_from_flags(C, flags);
}

int ker_q(const Code& C) { return kernel_q(C).dim(); }

LinearBasis kernel_p(const Code& C) {
    const Field& f = *C.field();
    int n = C.length();
    const auto& words = C.words();
    std::vector<char> flags(words.size(), 0);
    long long m = (long long)words.size();
#pragma omp parallel
    {
        Word t(n);
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < m; ++i) {
            const Word& x = words[i];
            bool ok = true;
            for (const Word& c : words) {
                for (int s = 0; s < n; ++s) t[s] = f.add(x[s], c[s]);
                if (!C.contains_key(word_key(t))) {
                    ok = false;
                    break;
                }
            }
            flags[i] = ok;
        }
    }
    RrefBuilder rb(prime_subfield(f), n * f.e());
    for (size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) rb.insert(expand_to_prime(f, words[i]));
    return rb.take();
}

int ker_p(const Code& C) { return kernel_p(C).dim(); }

Rational ker_p_q_units(const Code& C) { return Rational(ker_p(C), C.field()->e()); }

LinearBasis dual_basis(const Code& C) {
    const Field& f = *C.field();
    int n = C.length();
    LinearBasis B = span_basis(C);
    std::vector<char> is_pivot(n, 0);
    for (int p : B.pivots) is_pivot[p] = 1;
    RrefBuilder rb(C.field(), n);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Word v(n, 0);
        v[free] = 1;
        for (int k = 0; k < B.dim(); ++k) v[B.pivots[k]] = f.neg(B.rows[k][free]);
        rb.insert(std::move(v));
    }
    return rb.take();
}

namespace {

Elem inner_product(const Field& f, const Word& a, const Word& b) {
    Elem s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

} // namespace

bool is_self_orthogonal(const Code& C) {
    const Field& f = *C.field();
    LinearBasis B = span_basis(C);
    for (int i = 0; i < B.dim(); ++i)
        for (int j = i; j < B.dim(); ++j)
            if (inner_product(f, B.rows[i], B.rows[j]) != 0) return false;
    return true;
}

bool is_self_dual(const Code& C) {
    if (C.length() % 2 != 0) return false;
    int r = rank_q(C);
    if (r != C.length() / 2 || !is_self_orthogonal(C)) return false;
    // C = C-perp additionally forces C itself to be linear
    long long size = 1;
    for (int i = 0; i < r; ++i) {
        size *= C.field()->q();
        if (size > (long long)C.size()) return false;
    }
    return size == (long long)C.size();
}

SubfieldAdditivity is_subfield_additive(const Code& C, int sub_degree) {
    const Field& f = *C.field();
    if (sub_degree < 1 || f.e() % sub_degree != 0)
        throw std::invalid_argument("subfield degree must divide e");
    SubfieldAdditivity out;

    // subfield elements: 0 and the powers of omega with exponent divisible
    // by (q-1)/(p^d-1)
    long long subq = 1;
    for (int i = 0; i < sub_degree; ++i) subq *= f.p();
    std::vector<Elem> scalars{0};
    int step = (f.q() - 1) / int(subq - 1);
    for (long long i = 0; i < subq - 1; ++i) scalars.push_back(f.pow(f.omega(), i * step));

    const auto& words = C.words();
    int n = C.length();
    Word t(n);
    for (const Word& u : words) {
        for (const Word& v : words) {
            for (int s = 0; s < n; ++s) t[s] = f.add(u[s], v[s]);
            if (!C.contains_key(word_key(t))) return out;
        }
        for (Elem a : scalars) {
            for (int s = 0; s < n; ++s) t[s] = f.mul(a, u[s]);
            if (!C.contains_key(word_key(t))) return out;
        }
    }
    // closed under addition => |C| = p^m; report the dimension k with
    // q^k = |C|, i.e. k = m/e (not necessarily an integer)
    long long size = (long long)C.size();
    int m = 0;
    while (size % f.p() == 0) {
        size /= f.p();
        ++m;
    }
    if (size != 1) throw std::logic_error("additive code size is not a power of p");
    out.additive = true;
    out.dim = Rational(m, f.e());
    return out;
}

Code puncture_by_kernel(const Code& C, const Word& v) {
    const Field& f = *C.field();
    int n = C.length(), q = f.q();
    if ((int)v.size() != n) throw std::invalid_argument("vector length does not match code length");

    // v must be constant-free of span{1}: not a scalar multiple of the all-ones word
    bool constant = std::all_of(v.begin(), v.end(), [&](Elem x) { return x == v[0]; });
    if (constant) throw std::invalid_argument("puncturing vector lies in span{1}");
    // v must be a kernel element: a*v + c stays in C for every scalar and codeword
    Word t(n);
    for (int a = 0; a < q; ++a) {
        for (const Word& c : C.words()) {
            for (int s = 0; s < n; ++s) t[s] = f.add(f.mul(Elem(a), v[s]), c[s]);
            if (!C.contains(t)) throw std::invalid_argument("puncturing vector is not in the kernel");
        }
    }

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (v[i] == 1) keep.push_back(i);
    std::vector<Word> out;
    out.reserve(C.size());
    for (const Word& w : C.words()) {
        Word r(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) r[i] = w[keep[i]];
        out.push_back(std::move(r));
    }
    Code punctured = Code::from_words(C.field(), int(keep.size()), std::move(out));
    if (punctured.size() * q != C.size())
        throw std::invalid_argument("restricted words do not collapse q-to-1; not a GH-code kernel puncture");
    return punctured;
}

int min_distance_serial(const Code& C) {
    if (C.size() < 2) throw std::invalid_argument("minimum distance needs at least two words");
    const auto& words = C.words();
    int n = C.length();
    int best = n + 1;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            int d = 0;
            for (int s = 0; s < n; ++s) d += words[i][s] != words[j][s];
            best = std::min(best, d);
        }
    return best;
}

int min_distance(const Code& C) {
    if (C.size() < 2) throw std::invalid_argument("minimum distance needs at least two words");
    const auto& words = C.words();
    int n = C.length();
    long long m = (long long)words.size();
    int best = n + 1;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (long long i = 0; i < m; ++i)
        for (long long j = i + 1; j < m; ++j) {
            int d = 0;
            for (int s = 0; s < n; ++s) d += words[i][s] != words[j][s];
            best = std::min(best, d);
        }
    return best;
}

bool is_gh_code(const Code& C) {
    const Field& f = *C.field();
    int n = C.length(), q = f.q();
    if (n % q != 0) return false;
    if (C.size() != size_t(q) * n) return false;
    Word zero(n, 0);
    if (!C.contains(zero)) return false;
    // closure under constant translates
    Word t(n);
    for (const Word& w : C.words())
        for (int a = 1; a < q; ++a) {
            for (int s = 0; s < n; ++s) t[s] = f.add(w[s], Elem(a));
            if (!C.contains(t)) return false;
        }
    // the words with first coordinate zero must form a GH matrix
    std::vector<Elem> cells;
    cells.reserve(size_t(n) * n);
    int rows = 0;
    for (const Word& w : C.words())
        if (w[0] == 0) {
            cells.insert(cells.end(), w.begin(), w.end());
            ++rows;
        }
    if (rows != n) return false;
    GhMatrix M(C.field(), n, std::move(cells));
    return is_gh(M).valid;
}

GhMatrix gh_code_matrix(const Code& C) {
    if (!is_gh_code(C)) throw std::invalid_argument("code is not a GH code");
    int n = C.length();
    std::vector<Elem> cells;
    cells.reserve(size_t(n) * n);
    for (const Word& w : C.words())
        if (w[0] == 0) cells.insert(cells.end(), w.begin(), w.end());
    return GhMatrix(C.field(), n, std::move(cells), Validity::valid);
}

} // namespace ghkit
