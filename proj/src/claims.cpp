#include "ghkit/claims.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ghkit/construct.hpp"
#include "ghkit/gh_code.hpp"
#include "ghkit/gh_matrix.hpp"
#include "ghkit/invariants.hpp"
#include "ghkit/linear.hpp"

namespace ghkit {

namespace {

// Largest matrix order the sweeps will profile; keeps the battery quick.
constexpr long long kOrderCap = 128;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// log_p(count) when count is a power of p, else -1.
int log_base(size_t count, int p) {
    int m = 0;
    size_t c = count;
    while (c > 1) {
        if (c % size_t(p)) return -1;
        c /= size_t(p);
        ++m;
    }
    return m;
}

std::vector<Word> span_words(const LinearBasis& b) {
    const Field& f = *b.field;
    std::vector<Word> out;
    long long total = ipow(f.q(), b.dim());
    out.reserve(size_t(total));
    for (long long idx = 0; idx < total; ++idx) {
        Word w(size_t(b.length), 0);
        long long t = idx;
        for (const Word& r : b.rows) {
            Elem c = Elem(t % f.q());
            t /= f.q();
            if (c == 0) continue;
            for (int i = 0; i < b.length; ++i)
                w[size_t(i)] = f.add(w[size_t(i)], f.mul(c, r[size_t(i)]));
        }
        out.push_back(std::move(w));
    }
    return out;
}

// Basis of span(a) n span(b), by filtering the span of the smaller side.
LinearBasis intersection_basis(const LinearBasis& a, const LinearBasis& b) {
    const LinearBasis& small = a.dim() <= b.dim() ? a : b;
    const LinearBasis& other = a.dim() <= b.dim() ? b : a;
    RrefBuilder inter(small.field, small.length);
    for (const Word& w : span_words(small))
        if (other.contains(w)) inter.insert(w);
    return inter.take();
}

// Per-claim bookkeeping: count what was checked, record what went wrong.
struct Tally {
    int checked = 0;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) problems.push_back(what);
    }
};

ClaimResult finish(const std::string& id, const Tally& t, const std::string& unit) {
    ClaimResult r;
    r.id = id;
    r.pass = t.problems.empty();
    std::ostringstream d;
    if (t.checked == 0) {
        d << "no " << unit << " within the order cap";
    } else if (r.pass) {
        d << t.checked << " " << unit << " checked";
    } else {
        d << t.problems.front();
        if (t.problems.size() > 1) d << " (+" << t.problems.size() - 1 << " more)";
    }
    r.detail = d.str();
    return r;
}

struct Entry {
    std::string name;
    GhMatrix m;
    InvariantProfile p;
};

struct Factor {
    std::string name;
    GhMatrix m;
    Code code;
    int rank;
    int ker;
    LinearBasis kernel;
};

Factor make_factor(const std::string& name, const GhMatrix& m) {
    Code c = c_code(m);
    LinearBasis k = kernel_q(c);
    int r = rank_q(c);
    return Factor{name, m, std::move(c), r, k.dim(), std::move(k)};
}

std::string at_name(const std::string& where) { return " at " + where; }

} // namespace

std::vector<ClaimResult> verify_claims(const FieldPtr& f, int h) {
    const int q = f->q();
    std::vector<ClaimResult> out;
    auto guarded = [&out](const std::string& id, auto&& body) {
        try {
            out.push_back(body());
        } catch (const std::exception& ex) {
            out.push_back({id, false, std::string("exception: ") + ex.what()});
        }
    };

    // ---- battery of constructed matrices --------------------------------
    std::vector<Entry> battery;
    std::string battery_error;
    auto add = [&battery](const std::string& name, const GhMatrix& m) {
        battery.push_back(Entry{name, m, profile(m)});
    };
    try {
        add("s_q", s_q(f));
        if (q >= 3) add("s_q_swapped", s_q_swapped(f));
        for (int t = 1; t <= h && ipow(q, t) <= kOrderCap; ++t)
            add("sylvester(" + std::to_string(t) + ")", sylvester(f, t));
        if (q > 2) {
            for (int hh = 2; hh <= h && ipow(q, hh) <= kOrderCap; ++hh) {
                for (int k = 1; k <= hh + 1; ++k) {
                    if (q == 3 && hh == 2 && k == 1) continue;
                    add("kernel_target(" + std::to_string(hh) + "," + std::to_string(k) + ")",
                        build_kernel_target(f, hh, k));
                }
                for (int k = (hh + 3) / 2; k <= hh; ++k) {
                    if (ipow(q, k - 1) < ipow(q, hh + 1 - k) + k - hh - 2) continue;
                    long long rmax = k + ipow(q, hh + 1 - k) - 1;
                    for (long long r = hh + 2; r <= rmax; ++r)
                        add("rank_kernel_target(" + std::to_string(hh) + "," + std::to_string(k) +
                                "," + std::to_string(r) + ")",
                            build_rank_kernel_target(f, hh, k, int(r)));
                }
            }
        }
    } catch (const std::exception& ex) {
        battery_error = ex.what();
    }

    // Kronecker factors: small normalized matrices with precomputed code data.
    std::vector<Factor> factors;
    if (battery_error.empty()) {
        factors.push_back(make_factor("s_q", s_q(f)));
        if (q >= 3) factors.push_back(make_factor("s_q_swapped", s_q_swapped(f)));
        if (ipow(q, 2) <= kOrderCap) factors.push_back(make_factor("sylvester(2)", sylvester(f, 2)));
    }

    struct KronSample {
        std::string name;
        GhMatrix m;
        const Factor* a;
        const Factor* b;
    };
    std::vector<KronSample> kron_samples;
    if (battery_error.empty()) {
        for (const Factor& a : factors)
            for (const Factor& b : factors) {
                if (1LL * a.m.n() * b.m.n() > kOrderCap) continue;
                std::vector<GhMatrix> bs(size_t(a.m.n()), b.m);
                GhMatrix m = kronecker(a.m, bs);
                std::string name = "kron(" + a.name + "," + b.name + ")";
                battery.push_back(Entry{name, m, profile(m)});
                kron_samples.push_back(KronSample{name, m, &a, &b});
            }
    }

    // Mixed block list: one switched block (kernel 2) among Sylvester blocks
    // (kernel 3), all of order q^2, summed against s_q.
    std::vector<Factor> mixed_blocks;
    struct Mixed {
        std::string name;
        GhMatrix m;
        std::vector<const Factor*> blocks;
    };
    std::vector<Mixed> mixed;
    if (battery_error.empty() && q > 2 && ipow(q, 3) <= 125) {
        mixed_blocks.push_back(make_factor("switched(4,2)", build_rank_kernel_target(f, 2, 2, 4)));
        mixed_blocks.push_back(make_factor("sylvester(2)", sylvester(f, 2)));
        std::vector<GhMatrix> bs;
        std::vector<const Factor*> blocks;
        bs.push_back(mixed_blocks[0].m);
        blocks.push_back(&mixed_blocks[0]);
        for (int i = 1; i < q; ++i) {
            bs.push_back(mixed_blocks[1].m);
            blocks.push_back(&mixed_blocks[1]);
        }
        GhMatrix m = kronecker(s_q(f), bs);
        mixed.push_back(Mixed{"kron(s_q,[switched,sylvester,...])", m, std::move(blocks)});
    }

    // ---- claims over the whole battery -----------------------------------
    guarded("construction-gh-valid", [&] {
        Tally t;
        if (!battery_error.empty()) t.expect(false, "battery failed: " + battery_error);
        for (const Entry& e : battery)
            t.expect(is_gh(e.m).valid, "invalid output" + at_name(e.name));
        return finish("construction-gh-valid", t, "matrices");
    });

    guarded("lemma1-rank", [&] {
        Tally t;
        for (const Entry& e : battery) {
            Code F = f_code(e.m);
            t.expect(e.p.rank == rank_q(F) + 1, "rank identity off" + at_name(e.name));
        }
        return finish("lemma1-rank", t, "matrices");
    });

    guarded("lemma1-kernel", [&] {
        Tally t;
        for (const Entry& e : battery) {
            Code F = f_code(e.m);
            t.expect(e.p.ker == kernel_q(F).dim() + 1, "kernel identity off" + at_name(e.name));
        }
        return finish("lemma1-kernel", t, "matrices");
    });

    guarded("kernel-in-code", [&] {
        Tally t;
        for (const Entry& e : battery) {
            Code C = c_code(e.m);
            LinearBasis K = kernel_q(C);
            bool inside = true;
            for (const Word& w : span_words(K))
                if (!C.contains(w)) inside = false;
            bool partitions = C.size() % size_t(ipow(q, K.dim())) == 0;
            t.expect(inside && partitions, "kernel not a subcode partitioning C" + at_name(e.name));
        }
        return finish("kernel-in-code", t, "matrices");
    });

    guarded("dual-dimension", [&] {
        Tally t;
        for (const Entry& e : battery) {
            Code C = c_code(e.m);
            t.expect(dual_basis(C).dim() + rank_q(C) == e.m.n(),
                     "dual dimension does not complement rank" + at_name(e.name));
        }
        return finish("dual-dimension", t, "matrices");
    });

    // ---- Kronecker formulas ----------------------------------------------
    guarded("kron-rank", [&] {
        Tally t;
        for (const KronSample& s : kron_samples) {
            Code C = c_code(s.m);
            t.expect(rank_q(C) == s.a->rank + s.b->rank - 1, "rank additivity off" + at_name(s.name));
        }
        return finish("kron-rank", t, "products");
    });

    guarded("kron-kernel", [&] {
        Tally t;
        for (const KronSample& s : kron_samples) {
            Code C = c_code(s.m);
            t.expect(kernel_q(C).dim() == s.a->ker + s.b->ker - 1,
                     "kernel additivity off" + at_name(s.name));
        }
        return finish("kron-kernel", t, "products");
    });

    guarded("kron-mixed-rank", [&] {
        Tally t;
        for (const Mixed& x : mixed) {
            Code C = c_code(x.m);
            Code Ch = c_code(s_q(f));
            RrefBuilder joint(f, x.blocks.front()->code.length());
            for (const Factor* b : x.blocks)
                for (const Word& w : b->code.words()) joint.insert(w);
            t.expect(rank_q(C) == rank_q(Ch) + joint.dim() - 1,
                     "mixed rank formula off" + at_name(x.name));
        }
        return finish("kron-mixed-rank", t, "products");
    });

    guarded("kron-mixed-kernel", [&] {
        Tally t;
        for (const Mixed& x : mixed) {
            // hypothesis: some block is translation equivalent to no other
            bool hyp = false;
            for (size_t i = 0; i < x.blocks.size() && !hyp; ++i) {
                bool lonely = true;
                for (size_t j = 0; j < x.blocks.size(); ++j)
                    if (j != i && translation_equivalent(x.blocks[i]->m, x.blocks[j]->m))
                        lonely = false;
                hyp = lonely;
            }
            if (!hyp) {
                t.expect(false, "hypothesis not met" + at_name(x.name));
                continue;
            }
            LinearBasis meet = x.blocks.front()->kernel;
            for (size_t i = 1; i < x.blocks.size(); ++i)
                meet = intersection_basis(meet, x.blocks[i]->kernel);
            Code C = c_code(x.m);
            LinearBasis K = kernel_q(C);
            bool shape = K.dim() == meet.dim();
            int blen = x.blocks.front()->code.length();
            for (const Word& w : K.rows) {
                Word head(w.begin(), w.begin() + blen);
                if (!meet.contains(head)) shape = false;
                for (size_t b = 1; b * size_t(blen) < w.size(); ++b)
                    for (size_t i = 0; i < size_t(blen); ++i)
                        if (w[b * size_t(blen) + i] != head[i]) shape = false;
            }
            t.expect(shape, "mixed kernel is not the diagonal intersection" + at_name(x.name));
        }
        return finish("kron-mixed-kernel", t, "products");
    });

    guarded("kron-k-additive", [&] {
        Tally t;
        for (const KronSample& s : kron_samples) {
            if (!is_subfield_additive(s.a->code, 1).additive) continue;
            if (!is_subfield_additive(s.b->code, 1).additive) continue;
            Code C = c_code(s.m);
            int m1 = log_base(s.a->code.size(), f->p());
            int m2 = log_base(s.b->code.size(), f->p());
            int mm = log_base(C.size(), f->p());
            t.expect(is_subfield_additive(C, 1).additive && m1 >= 0 && m2 >= 0 &&
                         mm == m1 + m2 - f->e(),
                     "additive dimension formula off" + at_name(s.name));
        }
        return finish("kron-k-additive", t, "products");
    });

    guarded("translation-sq", [&] {
        Tally t;
        if (q >= 3) {
            GhMatrix A = s_q(f), B = s_q_swapped(f);
            auto v = translation_equivalent(A, B);
            if (q == 3) {
                t.expect(v.has_value(), "s_3 and its column swap should share a row set");
            } else {
                int meet = intersection_dim(kernel_q(c_code(A)), kernel_q(c_code(B)));
                Code fa = f_code(A), fb = f_code(B);
                int overlap = 0;
                for (const Word& w : fb.words())
                    if (fa.contains(w)) ++overlap;
                t.expect(!v.has_value(), "unexpected translation equivalence of s_q and its swap");
                t.expect(meet == 1, "kernel intersection of s_q and its swap is not <1>");
                t.expect(overlap == 1, "row sets of s_q and its swap share a nonzero word");
            }
        }
        return finish("translation-sq", t, "checks");
    });

    guarded("kernel-target-sweep", [&] {
        Tally t;
        if (q > 2) {
            for (int hh = 2; hh <= h && ipow(q, hh) <= kOrderCap; ++hh) {
                for (int k = 1; k <= hh + 1; ++k) {
                    if (q == 3 && hh == 2 && k == 1) continue;
                    GhMatrix m = build_kernel_target(f, hh, k);
                    t.expect(ker_q(c_code(m)) == k, "kernel target missed at h=" +
                                                        std::to_string(hh) +
                                                        ", k=" + std::to_string(k));
                }
                std::vector<int> bad = {0, hh + 2};
                if (q == 3 && hh == 2) bad.push_back(1);
                for (int k : bad) {
                    bool rejected = false;
                    try {
                        build_kernel_target(f, hh, k);
                    } catch (const infeasible_error&) {
                        rejected = true;
                    }
                    t.expect(rejected, "missing rejection at h=" + std::to_string(hh) +
                                           ", k=" + std::to_string(k));
                }
            }
        }
        return finish("kernel-target-sweep", t, "cases");
    });

    guarded("rank-kernel-target-sweep", [&] {
        Tally t;
        if (q > 2) {
            for (int hh = 2; hh <= h && ipow(q, hh) <= kOrderCap; ++hh) {
                for (int k = (hh + 3) / 2; k <= hh; ++k) {
                    if (ipow(q, k - 1) < ipow(q, hh + 1 - k) + k - hh - 2) continue;
                    long long rmax = k + ipow(q, hh + 1 - k) - 1;
                    for (long long r = hh + 2; r <= rmax; ++r) {
                        GhMatrix m = build_rank_kernel_target(f, hh, k, int(r));
                        Code C = c_code(m);
                        t.expect(rank_q(C) == int(r) && ker_q(C) == k,
                                 "profile missed at h=" + std::to_string(hh) + ", k=" +
                                     std::to_string(k) + ", r=" + std::to_string(r));
                    }
                    for (long long r : {(long long)(hh + 1), rmax + 1}) {
                        bool rejected = false;
                        try {
                            build_rank_kernel_target(f, hh, k, int(r));
                        } catch (const infeasible_error&) {
                            rejected = true;
                        }
                        t.expect(rejected, "missing rank rejection at h=" + std::to_string(hh) +
                                               ", k=" + std::to_string(k) +
                                               ", r=" + std::to_string(r));
                    }
                }
            }
        }
        return finish("rank-kernel-target-sweep", t, "cases");
    });

    guarded("puncture-kernel-drop", [&] {
        Tally t;
        for (int tt = 2; tt <= h && ipow(q, tt) <= kOrderCap; ++tt) {
            GhMatrix m = sylvester(f, tt);
            Code C = c_code(m);
            LinearBasis K = kernel_q(C);
            RrefBuilder ones(f, K.length);
            ones.insert(Word(size_t(K.length), 1));
            LinearBasis one_span = ones.take();
            const Word* v = nullptr;
            for (const Word& w : K.rows)
                if (!one_span.contains(w) && (!v || w < *v)) v = &w;
            if (!v) {
                t.expect(false, "no kernel vector outside <1> at t=" + std::to_string(tt));
                continue;
            }
            Code P = puncture_by_kernel(C, *v);
            t.expect(P.length() == m.n() / q && is_gh_code(P) && ker_q(P) == K.dim() - 1,
                     "puncture did not drop the kernel by one at t=" + std::to_string(tt));
        }
        return finish("puncture-kernel-drop", t, "codes");
    });

    guarded("profile-translation-invariant", [&] {
        Tally t;
        for (const Entry& e : battery) {
            if (e.name != "s_q" && e.name != "sylvester(2)") continue;
            if (e.m.n() < 3) continue;
            std::vector<Move> moves = {Move::add_to_row(1, 1), Move::add_to_col(2, Elem(q - 1)),
                                       Move::add_to_row(0, Elem(q - 1))};
            GhMatrix moved = normalize(apply_moves(e.m, moves));
            InvariantProfile p = profile(moved);
            bool same = p.rank == e.p.rank && p.ker == e.p.ker && p.rank_p == e.p.rank_p &&
                        p.ker_p == e.p.ker_p && p.min_distance == e.p.min_distance &&
                        p.self_orthogonal == e.p.self_orthogonal && p.self_dual == e.p.self_dual;
            t.expect(same, "profile changed under translations" + at_name(e.name));
        }
        return finish("profile-translation-invariant", t, "matrices");
    });

    guarded("noneq-symmetric", [&] {
        Tally t;
        int done = 0;
        for (size_t i = 0; i < battery.size() && done < 4; ++i)
            for (size_t j = i + 1; j < battery.size() && done < 4; ++j) {
                const Entry& a = battery[i];
                const Entry& b = battery[j];
                if (a.m.n() != b.m.n()) continue;
                auto ab = nonequivalence_certificate(a.m, b.m);
                auto ba = nonequivalence_certificate(b.m, a.m);
                bool ok = ab.has_value() == ba.has_value();
                if (ab && ba)
                    ok = ok && ab->invariant == ba->invariant && ab->a == ba->b && ab->b == ba->a;
                t.expect(ok, "asymmetric certificate" + at_name(a.name + " vs " + b.name));
                ++done;
            }
        if (!battery.empty()) {
            const Entry& a = battery.front();
            t.expect(!nonequivalence_certificate(a.m, a.m).has_value(),
                     "self-certificate" + at_name(a.name));
        }
        return finish("noneq-symmetric", t, "pairs");
    });

    guarded("serial-parallel-agree", [&] {
        Tally t;
        GhMatrix good = ipow(q, 2) <= kOrderCap ? sylvester(f, 2) : s_q(f);
        ValidityReport rp = is_gh(good), rs = is_gh_serial(good);
        t.expect(rp.valid && rs.valid, "validity verdicts disagree on a valid matrix");

        GhMatrix base = s_q(f);
        std::vector<Elem> bad_cells(base.cells());
        bad_cells[size_t(base.n()) + 1] = f->add(bad_cells[size_t(base.n()) + 1], 1);
        GhMatrix bad(f, base.n(), bad_cells);
        ValidityReport bp = is_gh(bad), bs = is_gh_serial(bad);
        t.expect(!bp.valid && !bs.valid && bp.row_a == bs.row_a && bp.row_b == bs.row_b &&
                     bp.histogram == bs.histogram,
                 "first-violation reports disagree on a corrupted matrix");

        Code C = c_code(good);
        t.expect(kernel_q(C) == kernel_q_serial(C), "kernel bases disagree");
        t.expect(min_distance(C) == min_distance_serial(C), "minimum distances disagree");
        return finish("serial-parallel-agree", t, "comparisons");
    });

    // ---- aggregate rows, one per published bound -------------------------
    const char* bound_ids[] = {"kernel-range", "rank-max",        "rank-half",  "self-orthogonal",
                               "rank-window",  "rank-for-kernel", "kernel-max", "self-dual",
                               "dual-one",     "dual-unit"};
    std::map<std::string, std::pair<int, int>> counts; // id -> (pass, not_applicable)
    std::map<std::string, std::string> failures;
    for (const Entry& e : battery)
        for (const BoundVerdict& v : verify_bounds(e.p)) {
            if (v.status == BoundStatus::pass)
                counts[v.id].first++;
            else if (v.status == BoundStatus::not_applicable)
                counts[v.id].second++;
            else if (!failures.count(v.id))
                failures[v.id] = e.name + ": " + v.detail;
        }
    for (const char* id : bound_ids) {
        ClaimResult r;
        r.id = std::string("bounds:") + id;
        auto it = failures.find(id);
        if (it != failures.end()) {
            r.pass = false;
            r.detail = it->second;
        } else {
            r.pass = true;
            std::ostringstream d;
            d << counts[id].first << " pass, " << counts[id].second << " not applicable across "
              << battery.size() << " matrices";
            r.detail = d.str();
        }
        out.push_back(std::move(r));
    }

    return out;
}

} // namespace ghkit
