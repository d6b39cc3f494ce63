#include "ghkit/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghkit {

namespace {

Elem inner(const Field& f, const Word& u, const Word& v) {
    Elem acc = 0;
    for (size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
    return acc;
}

bool in_dual_of(const Field& f, const LinearBasis& span, const Word& v) {
    for (const Word& b : span.rows)
        if (inner(f, b, v) != 0) return false;
    return true;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string ratstr(const Rational& r) { return r.str(); }

} // namespace

InvariantProfile profile(const GhMatrix& m) {
    m.ensure_valid();
    GhMatrix nm = is_normalized(m) ? m : normalize(m);
    const Field& f = *nm.field();

    InvariantProfile p;
    p.q = f.q();
    p.p = f.p();
    p.e = f.e();
    p.n = nm.n();
    p.lambda = nm.lambda();

    long long rest = p.n;
    while (rest % p.p == 0) {
        rest /= p.p;
        ++p.t;
    }
    p.s = rest;
    p.h = (p.t % p.e == 0) ? p.t / p.e : -1;

    Code F = f_code(nm);
    Code C = c_code(nm);

    p.rank = rank_q(C);
    p.ker = ker_q(C);
    int rank_f = rank_q(F);
    int ker_f = kernel_q(F).dim();
    if (p.rank != rank_f + 1) throw std::logic_error("rank identity between row code and full code violated");
    if (p.ker != ker_f + 1) throw std::logic_error("kernel identity between row code and full code violated");

    p.rank_p = rank_p(C);
    p.ker_p = ker_p(C);
    p.ker_p_units = ker_p_q_units(C);
    p.self_orthogonal = is_self_orthogonal(F);
    p.self_dual = is_self_dual(C);
    p.min_distance = min_distance(C);

    LinearBasis span = span_basis(F);
    p.dual_has_one = in_dual_of(f, span, Word((size_t)p.n, 1));
    Word e1((size_t)p.n, 0);
    e1[0] = 1;
    p.dual_has_e1 = in_dual_of(f, span, e1);
    return p;
}

namespace {

BoundVerdict verdict(const char* id, bool applicable, bool ok, std::string detail) {
    BoundVerdict v;
    v.id = id;
    v.status = !applicable ? BoundStatus::not_applicable : ok ? BoundStatus::pass : BoundStatus::fail;
    v.detail = std::move(detail);
    return v;
}

} // namespace

std::vector<BoundVerdict> verify_bounds(const InvariantProfile& p) {
    std::vector<BoundVerdict> out;
    bool pow_of_q = p.s == 1 && p.h >= 1;

    {
        Rational lo(1, 1), k((long long)p.ker, 1), hi((long long)(p.e + p.t), (long long)p.e);
        bool ok = lo <= k && k <= p.ker_p_units && p.ker_p_units <= hi;
        out.push_back(verdict("kernel-range", true, ok,
                              "1 <= " + std::to_string(p.ker) + " <= " + ratstr(p.ker_p_units) +
                                  " <= 1+t/e = " + ratstr(hi)));
    }
    out.push_back(verdict("rank-max", true, p.rank <= p.n - 1,
                          "rank " + std::to_string(p.rank) + " <= n-1 = " + std::to_string(p.n - 1)));
    {
        bool applies = p.q > 3 || (p.q == 3 && p.lambda % 3 == 0);
        out.push_back(verdict("rank-half", applies, p.rank <= p.n / 2,
                              "rank " + std::to_string(p.rank) + " <= floor(n/2) = " + std::to_string(p.n / 2)));
    }
    {
        bool applies = p.q > 3 || (p.q == 3 && p.lambda % 3 == 0);
        out.push_back(verdict("self-orthogonal", applies, p.self_orthogonal,
                              std::string("row span self-orthogonal: ") + (p.self_orthogonal ? "yes" : "no")));
    }
    {
        bool applies = pow_of_q && (p.q > 3 || (p.q == 3 && p.h >= 2));
        long long hi = applies ? ipow(p.q, p.h) / 2 : 0;
        out.push_back(verdict("rank-window", applies, p.h + 1 <= p.rank && p.rank <= hi,
                              applies ? "rank " + std::to_string(p.rank) + " in {h+1,...,floor(q^h/2)} = {" +
                                            std::to_string(p.h + 1) + ",...," + std::to_string(hi) + "}"
                                      : "needs n = q^h with q > 3, or q = 3 and h >= 2"));
    }
    {
        bool applies = pow_of_q && p.q > 2;
        bool ok = true;
        std::string detail = "needs n = q^h with q > 2";
        if (applies) {
            if (p.ker == p.h + 1) {
                ok = p.rank == p.h + 1;
                detail = "linear case: rank " + std::to_string(p.rank) + " == h+1 = " + std::to_string(p.h + 1);
            } else {
                long long hi = p.ker == 1 ? ipow(p.q, p.h) / 2 : p.ker + ipow(p.q, p.h + 1 - p.ker) - 1;
                ok = p.h + 2 <= p.rank && p.rank <= hi;
                detail = "rank " + std::to_string(p.rank) + " in {h+2,...," + std::to_string(hi) +
                         "} given ker = " + std::to_string(p.ker);
            }
        }
        out.push_back(verdict("rank-for-kernel", applies, ok, detail));
    }
    {
        bool applies = p.e == 1 && p.s > 1;
        int hi = p.h >= 2 ? p.h : 1;
        out.push_back(verdict("kernel-max", applies, p.ker <= hi,
                              applies ? "ker " + std::to_string(p.ker) + " <= " + std::to_string(hi) +
                                            " for n = q^h*s, s > 1"
                                      : "needs prime q and n = q^h*s with s > 1"));
    }
    {
        bool applies = p.self_dual && pow_of_q && p.h >= 2;
        out.push_back(verdict("self-dual", applies, p.q % 2 == 0 && p.ker == 1,
                              applies ? std::string("self-dual forces even q (q = ") + std::to_string(p.q) +
                                            ") and ker = 1 (ker = " + std::to_string(p.ker) + ")"
                                      : "needs a self-dual code with n = q^h, h >= 2"));
    }
    out.push_back(verdict("dual-one", true, p.dual_has_one,
                          std::string("all-one word in the dual of the row span: ") +
                              (p.dual_has_one ? "yes" : "no")));
    out.push_back(verdict("dual-unit", true, p.dual_has_e1,
                          std::string("(1,0,...,0) in the dual of the row span: ") +
                              (p.dual_has_e1 ? "yes" : "no")));
    return out;
}

std::optional<NoneqCertificate> nonequivalence_certificate(const GhMatrix& a, const GhMatrix& b) {
    if (!a.field()->same_as(*b.field()) || a.n() != b.n())
        throw std::invalid_argument("nonequivalence certificate needs matrices with equal (q, n)");
    InvariantProfile pa = profile(a);
    InvariantProfile pb = profile(b);
    auto differ = [](const char* name, long long x, long long y) {
        return NoneqCertificate{name, x, y};
    };
    if (pa.rank != pb.rank) return differ("rank", pa.rank, pb.rank);
    if (pa.ker != pb.ker) return differ("ker", pa.ker, pb.ker);
    if (pa.rank_p != pb.rank_p) return differ("rank_p", pa.rank_p, pb.rank_p);
    if (pa.ker_p != pb.ker_p) return differ("ker_p", pa.ker_p, pb.ker_p);
    if (pa.min_distance != pb.min_distance) return differ("min_distance", pa.min_distance, pb.min_distance);
    return std::nullopt;
}

} // namespace ghkit
