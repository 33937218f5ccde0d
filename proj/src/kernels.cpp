#include "pog/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pog::kernels {

namespace {
int g_threads = 1;

bool lex_less(const Triple& x, const Triple& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
}
}  // namespace

void set_parallel_threads(int n) { g_threads = n < 1 ? 1 : n; }
int parallel_threads() { return g_threads; }

std::optional<Triple> assoc_violation_serial(const std::vector<int>& table, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = table[a * n + b];
            for (int c = 0; c < n; ++c)
                if (table[ab * n + c] != table[a * n + table[b * n + c]])
                    return Triple{a, b, c};
        }
    return std::nullopt;
}

std::optional<Triple> assoc_violation(const std::vector<int>& table, int n) {
#ifdef _OPENMP
    Triple best{n, n, n};
    bool found = false;
#pragma omp parallel num_threads(g_threads)
    {
        Triple local{n, n, n};
        bool local_found = false;
#pragma omp for collapse(2) schedule(static)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (local_found && (a > local.a || (a == local.a && b > local.b))) continue;
                const int ab = table[a * n + b];
                for (int c = 0; c < n; ++c)
                    if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
                        Triple t{a, b, c};
                        if (!local_found || lex_less(t, local)) {
                            local = t;
                            local_found = true;
                        }
                        break;
                    }
            }
#pragma omp critical
        {
            if (local_found && (!found || lex_less(local, best))) {
                best = local;
                found = true;
            }
        }
    }
    if (found) return best;
    return std::nullopt;
#else
    return assoc_violation_serial(table, n);
#endif
}

std::optional<Triple> star_violation_serial(const std::vector<int>& table, int n,
                                            const std::vector<int>& cone,
                                            const std::vector<char>& in_cone,
                                            const std::vector<char>& in_derived,
                                            const std::vector<int>& fmap,
                                            const std::vector<int>& inv) {
    for (int a : cone)
        for (int b : cone) {
            const int abi = table[a * n + inv[b]];
            if (!in_derived[abi]) continue;
            for (int c : cone) {
                if (fmap[b] != fmap[c]) continue;
                if (!in_cone[table[abi * n + c]]) return Triple{a, b, c};
            }
        }
    return std::nullopt;
}

std::optional<Triple> star_violation(const std::vector<int>& table, int n,
                                     const std::vector<int>& cone,
                                     const std::vector<char>& in_cone,
                                     const std::vector<char>& in_derived,
                                     const std::vector<int>& fmap,
                                     const std::vector<int>& inv) {
#ifdef _OPENMP
    const int m = int(cone.size());
    Triple best{n, n, n};
    bool found = false;
#pragma omp parallel num_threads(g_threads)
    {
        Triple local{n, n, n};
        bool local_found = false;
#pragma omp for schedule(static)
        for (int ia = 0; ia < m; ++ia) {
            const int a = cone[ia];
            if (local_found && a > local.a) continue;
            for (int b : cone) {
                const int abi = table[a * n + inv[b]];
                if (!in_derived[abi]) continue;
                for (int c : cone) {
                    if (fmap[b] != fmap[c]) continue;
                    if (!in_cone[table[abi * n + c]]) {
                        Triple t{a, b, c};
                        if (!local_found || lex_less(t, local)) {
                            local = t;
                            local_found = true;
                        }
                        break;
                    }
                }
                if (local_found && local.a == a) break;  // b ascending: first b wins
            }
        }
#pragma omp critical
        {
            if (local_found && (!found || lex_less(local, best))) {
                best = local;
                found = true;
            }
        }
    }
    if (found) return best;
    return std::nullopt;
#else
    return star_violation_serial(table, n, cone, in_cone, in_derived, fmap, inv);
#endif
}

}  // namespace pog::kernels
