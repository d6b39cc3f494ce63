// Times the OpenMP kernels against their serial references on a mid-size
// Sylvester matrix (order 256 by default: --q Q --t T to change).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>

#include "ghkit/construct.hpp"
#include "ghkit/gh_code.hpp"
#include "ghkit/gh_matrix.hpp"

using namespace ghkit;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F> std::pair<double, decltype(std::declval<F>()())> timed(F&& f) {
    auto start = clock_type::now();
    auto value = f();
    std::chrono::duration<double, std::milli> ms = clock_type::now() - start;
    return {ms.count(), value};
}

void report(const char* name, int n, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-14s %5d %12.2f %14.2f %9.2fx %s\n", name, n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int q = 4, t = 4;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--q")) q = std::atoi(argv[i + 1]);
        if (!std::strcmp(argv[i], "--t")) t = std::atoi(argv[i + 1]);
    }
    int p = 2;
    while (q % p) ++p;
    int e = 0;
    long long pw = 1;
    while (pw < q) pw *= p, ++e;
    if (pw != q) {
        std::fprintf(stderr, "q must be a prime power\n");
        return 2;
    }

    FieldPtr f = field_new(p, e);
    GhMatrix m = sylvester(f, t);
    Code c = c_code(m);
    std::printf("order %d over GF(%d), |C| = %zu\n\n", m.n(), q, c.size());
    std::printf("%-14s %5s %12s %14s %10s\n", "kernel", "n", "serial(ms)", "parallel(ms)",
                "speedup");

    {
        auto [ts, rs] = timed([&] { return is_gh_serial(m); });
        auto [tp, rp] = timed([&] { return is_gh(m); });
        report("is_gh", m.n(), ts, tp, rs.valid == rp.valid && rs.row_a == rp.row_a);
    }
    {
        auto [ts, rs] = timed([&] { return kernel_q_serial(c); });
        auto [tp, rp] = timed([&] { return kernel_q(c); });
        report("kernel filter", m.n(), ts, tp, rs == rp);
    }
    {
        auto [ts, rs] = timed([&] { return min_distance_serial(c); });
        auto [tp, rp] = timed([&] { return min_distance(c); });
        report("min distance", m.n(), ts, tp, rs == rp);
    }
    return 0;
}
