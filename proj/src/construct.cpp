#include "ghkit/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ghkit/gh_code.hpp"
#include "ghkit/linear.hpp"
#include "ghkit/word_key.hpp"

namespace ghkit {

namespace {

// Constructions re-verify their output on emission, which is quadratic in
// the order; keep orders desk-sized.
constexpr int kMaxOrder = 1024;

GhMatrix verified(GhMatrix m) {
    if (!is_gh(m).valid) throw std::logic_error("construction emitted a non-GH matrix");
    return m;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void check_plan_word(const Field& f, const Word& w, int n, const char* what) {
    if ((int)w.size() != n)
        throw std::invalid_argument(std::string(what) + " has length " + std::to_string(w.size()) +
                                    ", expected " + std::to_string(n));
    for (Elem x : w)
        if (x >= f.q()) throw std::invalid_argument(std::string(what) + " has an entry outside F_q");
}

// All q^dim words of span(basis rows).
std::vector<Word> span_elements(const Field& f, const LinearBasis& basis) {
    std::vector<Word> out{Word(size_t(basis.length), 0)};
    for (int i = 0; i < basis.dim(); ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * f.q());
        for (const Word& w : out)
            for (int a = 0; a < f.q(); ++a) {
                Word t = w;
                for (int c = 0; c < basis.length; ++c)
                    t[c] = f.add(t[c], f.mul(Elem(a), basis.rows[i][c]));
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> cyclic_shift_perm(int n, int d) {
    std::vector<int> p(n);
    for (int j = 0; j < n; ++j) p[j] = (j + d) % n;
    return p;
}

} // namespace

GhMatrix s_q(const FieldPtr& f) {
    int q = f->q();
    std::vector<Elem> cells((size_t)q * q);
    const auto& eo = f->elem_order();
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) cells[(size_t)i * q + j] = f->mul(eo[i], eo[j]);
    return verified(GhMatrix(f, q, std::move(cells)));
}

GhMatrix s_q_swapped(const FieldPtr& f) {
    if (f->q() < 3) throw std::invalid_argument("s_q_swapped needs q >= 3");
    GhMatrix m = s_q(f);
    std::vector<int> perm(f->q());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[1], perm[2]);
    return verified(apply_moves(m, {Move::col_perm_of(perm)}));
}

GhMatrix sylvester(const FieldPtr& f, int t) {
    if (t < 1) throw std::invalid_argument("sylvester needs t >= 1");
    GhMatrix m = s_q(f);
    for (int level = 1; level < t; ++level)
        m = kronecker(s_q(f), std::vector<GhMatrix>((size_t)f->q(), m));
    return m;
}

std::vector<Word> sylvester_generators(const FieldPtr& f, int h) {
    if (h < 1) throw std::invalid_argument("sylvester_generators needs h >= 1");
    long long n = ipow(f->q(), h);
    if (n > kMaxOrder) throw std::invalid_argument("order q^h exceeds the supported limit");
    const auto& eo = f->elem_order();
    std::vector<Word> gens;
    for (int i = 1; i <= h; ++i) {
        long long stride = ipow(f->q(), h - i);
        Word v((size_t)n);
        for (long long c = 0; c < n; ++c) v[(size_t)c] = eo[(size_t)((c / stride) % f->q())];
        gens.push_back(std::move(v));
    }
    return gens;
}

GhMatrix kronecker(const GhMatrix& h, const std::vector<GhMatrix>& bs) {
    h.ensure_valid();
    int n = h.n();
    if ((int)bs.size() != n)
        throw std::invalid_argument("kronecker needs one block matrix per row of the outer matrix");
    int m = bs.front().n();
    for (const GhMatrix& b : bs) {
        b.ensure_valid();
        if (!b.field()->same_as(*h.field()))
            throw std::invalid_argument("kronecker block over a different field");
        if (b.n() != m) throw std::invalid_argument("kronecker blocks of unequal order");
    }
    long long nn = (long long)n * m;
    if (nn > kMaxOrder) throw std::invalid_argument("kronecker order exceeds the supported limit");
    const Field& f = *h.field();
    std::vector<Elem> cells((size_t)nn * nn);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < m; ++r) {
            size_t base = ((size_t)i * m + r) * nn;
            for (int j = 0; j < n; ++j) {
                Elem hij = h.at(i, j);
                for (int c = 0; c < m; ++c) cells[base + (size_t)j * m + c] = f.add(hij, bs[i].at(r, c));
            }
        }
    return verified(GhMatrix(h.field(), (int)nn, std::move(cells)));
}

GhMatrix switch_cosets(const GhMatrix& h, const SwitchPlan& plan) {
    h.ensure_valid();
    const Field& f = *h.field();
    int n = h.n();
    if (plan.coset_reps.size() != plan.block_vectors.size())
        throw std::invalid_argument("switch plan needs one block vector per coset representative");
    for (const Word& g : plan.kernel_generators) check_plan_word(f, g, n, "kernel generator");
    for (const Word& x : plan.coset_reps) check_plan_word(f, x, n, "coset representative");
    for (const Word& e : plan.block_vectors) check_plan_word(f, e, n, "block vector");

    RrefBuilder rb(h.field(), n);
    for (const Word& g : plan.kernel_generators) rb.insert(g);
    LinearBasis K = rb.take();

    std::unordered_set<std::string> row_keys;
    for (int i = 0; i < n; ++i) row_keys.insert(word_key(h.row_word(i)));
    std::vector<Word> kset = span_elements(f, K);
    Word t((size_t)n);
    for (int i = 0; i < n; ++i) {
        Word r = h.row_word(i);
        for (const Word& kv : kset) {
            for (int c = 0; c < n; ++c) t[c] = f.add(r[c], kv[c]);
            if (!row_keys.count(word_key(t)))
                throw std::invalid_argument("rows do not partition into cosets of the plan subgroup");
        }
    }

    // canonical coset labels via reduction mod K
    std::unordered_map<std::string, int> coset_of;
    for (size_t j = 0; j < plan.coset_reps.size(); ++j) {
        const Word& x = plan.coset_reps[j];
        if (!row_keys.count(word_key(x)))
            throw std::invalid_argument("coset representative is not a row of the matrix");
        Word red = K.reduce(x);
        if (std::all_of(red.begin(), red.end(), [](Elem e) { return e == 0; }))
            throw std::invalid_argument("coset representative lies in the plan subgroup");
        if (!coset_of.emplace(word_key(red), (int)j).second)
            throw std::invalid_argument("two coset representatives lie in the same coset");
    }

    // column groups on which every kernel generator is constant, in order of
    // first appearance
    std::unordered_map<std::string, int> block_of_sig;
    std::vector<std::vector<int>> blocks;
    for (int c = 0; c < n; ++c) {
        Word sig;
        for (const Word& g : K.rows) sig.push_back(g[c]);
        auto [it, fresh] = block_of_sig.emplace(word_key(sig), (int)blocks.size());
        if (fresh) blocks.emplace_back();
        blocks[it->second].push_back(c);
    }
    for (const Word& e : plan.block_vectors) {
        std::vector<int> support;
        for (int c = 0; c < n; ++c) {
            if (e[c] > 1) throw std::invalid_argument("block vector entries must be 0 or 1");
            if (e[c] == 1) support.push_back(c);
        }
        bool aligned = false;
        for (const auto& b : blocks)
            if (support == b) aligned = true;
        if (!aligned)
            throw std::invalid_argument("block vector is not the indicator of one kernel-constant column group");
    }

    std::vector<Elem> cells((size_t)n * n);
    for (int i = 0; i < n; ++i) {
        Word r = h.row_word(i);
        auto it = coset_of.find(word_key(K.reduce(r)));
        if (it != coset_of.end()) {
            const Word& e = plan.block_vectors[it->second];
            for (int c = 0; c < n; ++c) r[c] = f.add(r[c], e[c]);
        }
        std::copy(r.begin(), r.end(), cells.begin() + (size_t)i * n);
    }
    GhMatrix out(h.field(), n, std::move(cells));
    if (!is_gh(out).valid)
        throw std::invalid_argument("switched matrix is not a generalized Hadamard matrix");
    return out;
}

namespace {

// Lexicographically least rows in pairwise-distinct cosets of K, skipping K
// itself.
std::vector<Word> least_coset_reps(const Field& f, const std::vector<Word>& rows,
                                   const std::vector<Word>& kset, int count) {
    std::unordered_set<std::string> kkeys;
    for (const Word& kv : kset) kkeys.insert(word_key(kv));
    std::vector<Word> sorted_rows = rows;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    std::vector<Word> reps;
    Word d(rows.front().size());
    for (const Word& r : sorted_rows) {
        if (kkeys.count(word_key(r))) continue;
        bool seen = false;
        for (const Word& x : reps) {
            for (size_t c = 0; c < d.size(); ++c) d[c] = f.sub(r[c], x[c]);
            if (kkeys.count(word_key(d))) {
                seen = true;
                break;
            }
        }
        if (seen) continue;
        reps.push_back(r);
        if ((int)reps.size() == count) break;
    }
    return reps;
}

// First column permutation of m (cyclic shifts, then the given fallback
// perms) accepted by the predicate.
template <typename Accept, typename FallbackPerms>
GhMatrix permute_until(const GhMatrix& m, Accept accept, FallbackPerms fallback) {
    int n = m.n();
    for (int d = 1; d < n; ++d) {
        GhMatrix p = apply_moves(m, {Move::col_perm_of(cyclic_shift_perm(n, d))});
        if (accept(p)) return p;
    }
    for (const auto& perm : fallback()) {
        GhMatrix p = apply_moves(m, {Move::col_perm_of(perm)});
        if (accept(p)) return p;
    }
    throw std::runtime_error("column permutation search exhausted");
}

// Permutations of the q column groups of a block matrix, identity excluded,
// in lexicographic order.
std::vector<std::vector<int>> block_perms(int n, int q) {
    int bs = n / q;
    std::vector<int> sigma(q);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> out;
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        std::vector<int> perm(n);
        for (int b = 0; b < q; ++b)
            for (int o = 0; o < bs; ++o) perm[b * bs + o] = sigma[b] * bs + o;
        out.push_back(std::move(perm));
    }
    return out;
}

// All transpositions (i j), i < j, in lexicographic order.
std::vector<std::vector<int>> transposition_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back(id);
            std::swap(out.back()[i], out.back()[j]);
        }
    return out;
}

GhMatrix seeded_tower(const FieldPtr& f, int h, int k, const GhMatrix& seed) {
    int q = f->q();
    if (h == 1) return seed;
    if (k >= 2)
        return kronecker(s_q(f), std::vector<GhMatrix>((size_t)q, seeded_tower(f, h - 1, k - 1, seed)));
    if (h == 2) {
        // both codes have kernel <1>, so any non-translation-equivalent
        // permutation of the seed drives the mixed kernel down to <1>
        GhMatrix pi = permute_until(
            seed, [&](const GhMatrix& p) { return !translation_equivalent(seed, p).has_value(); },
            [&] { return transposition_perms(seed.n()); });
        std::vector<GhMatrix> blocks((size_t)q, seed);
        blocks[0] = pi;
        return kronecker(s_q(f), blocks);
    }
    std::vector<GhMatrix> blocks((size_t)q, seeded_tower(f, h - 1, 2, seed));
    blocks[0] = seeded_tower(f, h - 1, 1, seed);
    return kronecker(s_q(f), blocks);
}

} // namespace

GhMatrix build_kernel_target(const FieldPtr& f, int h, int k) {
    int q = f->q();
    if (q <= 2) throw infeasible_error("kernel-target construction needs q > 2");
    if (h < 2) throw infeasible_error("kernel-target construction needs h >= 2");
    if (q == 3 && h == 2) {
        if (k < 2 || k > 3)
            throw infeasible_error("kernel dimension " + std::to_string(k) +
                                   " is not realizable at q=3, h=2: only k in {2,3} occurs");
    } else if (k < 1 || k > h + 1) {
        throw infeasible_error("kernel dimension " + std::to_string(k) + " is not realizable: only k in {1,...," +
                               std::to_string(h + 1) + "} occurs at q=" + std::to_string(q) +
                               ", h=" + std::to_string(h));
    }
    if (k == h + 1) return sylvester(f, h);
    if (h == 2 && k == 2) return build_rank_kernel_target(f, 2, 2, 4);
    if (h == 2) { // k == 1, q > 3
        std::vector<GhMatrix> blocks((size_t)q, s_q(f));
        blocks[0] = s_q_swapped(f);
        return normalize(kronecker(s_q(f), blocks));
    }
    if (q == 3 && h == 3 && k == 2) {
        // descending to (h=2, k=1) is impossible at q=3; mix the two order-9
        // matrices instead
        std::vector<GhMatrix> blocks(3, sylvester(f, 2));
        blocks[0] = build_kernel_target(f, 2, 2);
        return normalize(kronecker(s_q(f), blocks));
    }
    if (k == 1) {
        if (q == 3 && h == 3) {
            GhMatrix b2 = build_kernel_target(f, 2, 2);
            LinearBasis k2 = kernel_q(c_code(b2));
            GhMatrix pi = permute_until(
                b2,
                [&](const GhMatrix& p) {
                    return intersection_dim(k2, kernel_q(c_code(normalize(p)))) == 1;
                },
                [&] { return block_perms(b2.n(), q); });
            std::vector<GhMatrix> blocks(3, b2);
            blocks[0] = pi;
            return normalize(kronecker(s_q(f), blocks));
        }
        std::vector<GhMatrix> blocks((size_t)q, build_kernel_target(f, h - 1, 2));
        blocks[0] = build_kernel_target(f, h - 1, 1);
        return normalize(kronecker(s_q(f), blocks));
    }
    return normalize(kronecker(s_q(f), std::vector<GhMatrix>((size_t)q, build_kernel_target(f, h - 1, k - 1))));
}

GhMatrix build_kernel_target(const FieldPtr& f, int h, int k, const GhMatrix& seed) {
    int q = f->q();
    if (q <= 2) throw infeasible_error("kernel-target construction needs q > 2");
    if (f->e() != 1) throw std::invalid_argument("seeded kernel-target construction needs prime q");
    if (h < 2) throw infeasible_error("kernel-target construction needs h >= 2");
    seed.ensure_valid();
    if (!seed.field()->same_as(*f)) throw std::invalid_argument("seed is over a different field");
    int s = seed.n() / q;
    if (s == 1) throw std::invalid_argument("seed order must exceed q");
    if (s % q == 0) throw std::invalid_argument("seed lambda must not be a multiple of q");
    if (k < 1 || k > h)
        throw infeasible_error("kernel dimension " + std::to_string(k) +
                               " is not realizable from a seed: only k in {1,...," + std::to_string(h) +
                               "} occurs");
    return normalize(seeded_tower(f, h, k, normalize(seed)));
}

GhMatrix build_rank_kernel_target(const FieldPtr& f, int h, int k, int r) {
    int q = f->q();
    if (q <= 2) throw infeasible_error("rank-kernel-target construction needs q > 2");
    if (h < 2) throw infeasible_error("rank-kernel-target construction needs h >= 2");
    if (k < (h + 3) / 2 || k > h)
        throw infeasible_error("kernel dimension " + std::to_string(k) + " is outside {ceil((h+2)/2),...,h} = {" +
                               std::to_string((h + 3) / 2) + ",...," + std::to_string(h) + "}");
    long long hi = (long long)k + ipow(q, h + 1 - k) - 1;
    if (r < h + 2 || r > hi)
        throw infeasible_error("rank " + std::to_string(r) + " is outside {h+2,...,k+q^(h+1-k)-1} = {" +
                               std::to_string(h + 2) + ",...," + std::to_string(hi) + "}");
    if (ipow(q, k - 1) < ipow(q, h + 1 - k) + k - h - 2)
        throw infeasible_error("not enough column groups for the requested switches");

    GhMatrix host = sylvester(f, h);
    std::vector<Word> gens = sylvester_generators(f, h);
    SwitchPlan plan;
    plan.kernel_generators.assign(gens.begin(), gens.begin() + (k - 1));
    RrefBuilder rb(f, host.n());
    for (const Word& g : plan.kernel_generators) rb.insert(g);
    std::vector<Word> kset = span_elements(*f, rb.take());

    int s = r - h - 1;
    std::vector<Word> rows;
    for (int i = 0; i < host.n(); ++i) rows.push_back(host.row_word(i));
    plan.coset_reps = least_coset_reps(*f, rows, kset, s);

    long long bs = ipow(q, h - k + 1); // column-group size for K = <v_1..v_{k-1}>
    for (int j = 1; j <= s; ++j) {
        Word e((size_t)host.n(), 0);
        for (long long c = bs * j; c < bs * (j + 1); ++c) e[(size_t)c] = 1;
        plan.block_vectors.push_back(std::move(e));
    }
    return normalize(switch_cosets(host, plan));
}

} // namespace ghkit
