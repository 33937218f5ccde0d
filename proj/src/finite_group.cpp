#include "pog/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pog/kernels.hpp"

namespace pog {

FiniteGroup::FiniteGroup() : n(1), table{0}, identity(0), inv{0} {}

FiniteGroup::FiniteGroup(int order, std::vector<int> op_table, int id)
    : n(order), table(std::move(op_table)), identity(id) {
    Verdict v = validate_group_table(table, n, identity);
    if (!v.is_holds()) throw ModelError("invalid group table: " + v.witness());
    inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (op(a, b) == identity) inv[a] = b;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

Verdict validate_group_table(const std::vector<int>& table, int order, int identity) {
    const int n = order;
    if (n <= 0 || int(table.size()) != n * n) throw ModelError("group table is not square");
    if (identity < 0 || identity >= n) throw ModelError("identity index out of range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = table[a * n + b];
            if (v < 0 || v >= n)
                return Verdict::fails("entry out of range at (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
        }
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table[a * n + b]]++)
                return Verdict::fails("row " + std::to_string(a) + " is not a permutation");
            if (seen_col[table[b * n + a]]++)
                return Verdict::fails("column " + std::to_string(a) + " is not a permutation");
        }
    }
    for (int a = 0; a < n; ++a) {
        if (table[identity * n + a] != a || table[a * n + identity] != a)
            return Verdict::fails("identity law fails at " + std::to_string(a));
    }
    if (auto t = kernels::assoc_violation(table, n))
        return Verdict::fails("associativity fails at (" + std::to_string(t->a) + "," +
                              std::to_string(t->b) + "," + std::to_string(t->c) + ")");
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n; ++b)
            if (table[a * n + b] == identity && table[b * n + a] == identity) has = true;
        if (!has) return Verdict::fails("no inverse for " + std::to_string(a));
    }
    return Verdict::holds("group axioms verified on all of {0.." + std::to_string(n - 1) + "}");
}

std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> seed) {
    std::vector<char> in(G.n, 0);
    std::vector<int> work;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(G.identity);
    for (int s : seed) add(s);
    for (size_t i = 0; i < work.size(); ++i) {
        add(G.inv[work[i]]);
        for (size_t j = 0; j <= i; ++j) {
            add(G.op(work[i], work[j]));
            add(G.op(work[j], work[i]));
        }
    }
    std::vector<int> out;
    for (int x = 0; x < G.n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
    std::vector<char> in(G.n, 0);
    for (int x : S) in[x] = 1;
    if (!in[G.identity]) return false;
    for (int a : S) {
        if (!in[G.inv[a]]) return false;
        for (int b : S)
            if (!in[G.op(a, b)]) return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
    if (!is_subgroup(G, S)) return false;
    std::vector<char> in(G.n, 0);
    for (int x : S) in[x] = 1;
    for (int g = 0; g < G.n; ++g)
        for (int s : S)
            if (!in[G.conj(g, s)]) return false;
    return true;
}

std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& seed) {
    // conjugation-orbit closure first, then subgroup closure
    std::set<int> orbit(seed.begin(), seed.end());
    std::vector<int> work(seed.begin(), seed.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (int g = 0; g < G.n; ++g) {
            int c = G.conj(g, work[i]);
            if (orbit.insert(c).second) work.push_back(c);
        }
    return subgroup_closure(G, std::vector<int>(orbit.begin(), orbit.end()));
}

std::vector<int> commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            comms.push_back(G.op(G.op(a, b), G.op(G.inv[a], G.inv[b])));
    return normal_closure(G, comms);
}

std::vector<int> center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int a = 0; a < G.n; ++a) {
        bool central = true;
        for (int b = 0; b < G.n && central; ++b)
            if (G.op(a, b) != G.op(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

QuotientResult quotient_group(const FiniteGroup& G, const std::vector<int>& N) {
    if (!is_subgroup(G, N)) throw ModelError("quotient by a non-subgroup");
    std::vector<int> normal = N;
    if (!is_normal_subgroup(G, N)) normal = normal_closure(G, N);
    std::vector<int> coset(G.n, -1);
    std::vector<int> reps;  // ordered by minimal member, so identity coset is 0
    for (int g = 0; g < G.n; ++g) {
        if (coset[g] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(g);
        for (int h : normal) coset[G.op(g, h)] = id;
    }
    int q = int(reps.size());
    std::vector<int> table(q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i * q + j] = coset[G.op(reps[i], reps[j])];
    QuotientResult r{FiniteGroup(q, table, coset[G.identity]), coset};
    return r;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    std::vector<int> cls(G.n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < G.n; ++x) {
        if (cls[x] >= 0) continue;
        int id = int(classes.size());
        classes.emplace_back();
        for (int g = 0; g < G.n; ++g) {
            int c = G.conj(g, x);
            if (cls[c] < 0) {
                cls[c] = id;
                classes[id].push_back(c);
            }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& G) {
    // normal subgroups are exactly the subgroup-forming unions of
    // conjugacy classes containing the identity class
    auto classes = conjugacy_classes(G);
    int idc = -1;
    for (int i = 0; i < int(classes.size()); ++i)
        for (int x : classes[i])
            if (x == G.identity) idc = i;
    std::vector<int> others;
    for (int i = 0; i < int(classes.size()); ++i)
        if (i != idc) others.push_back(i);
    std::set<std::vector<int>> found;
    const int m = int(others.size());
    if (m > 20) throw UnsupportedError("too many conjugacy classes for enumeration");
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<int> cand = classes[idc];
        for (int i = 0; i < m; ++i)
            if (mask & (1L << i))
                cand.insert(cand.end(), classes[others[i]].begin(), classes[others[i]].end());
        std::sort(cand.begin(), cand.end());
        if (is_subgroup(G, cand)) found.insert(cand);
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

FiniteGroup cyclic_group(int n) {
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return FiniteGroup(n, t, 0);
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.n * B.n;
    std::vector<int> t(n * n);
    auto idx = [&](int a, int b) { return a * B.n + b; };
    for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1)
            for (int a2 = 0; a2 < A.n; ++a2)
                for (int b2 = 0; b2 < B.n; ++b2)
                    t[idx(a1, b1) * n + idx(a2, b2)] = idx(A.op(a1, a2), B.op(b1, b2));
    return FiniteGroup(n, t, idx(A.identity, B.identity));
}

namespace {
// permutations in lexicographic order, identity first; composition
// (p*q)(x) = p(q(x)) is the oracle for the table
std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;
    int n = int(perms.size());
    int deg = int(perms[0].size());
    std::vector<int> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(deg);
            for (int x = 0; x < deg; ++x) comp[x] = perms[i][perms[j][x]];
            auto it = index.find(comp);
            if (it == index.end()) throw ModelError("permutation set not closed");
            t[i * n + j] = it->second;
        }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    return FiniteGroup(n, t, index.at(id));
}
}  // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw UnsupportedError("symmetric_group supports n in 1..5");
    return group_from_permutations(all_permutations(n));
}

FiniteGroup dihedral_group_d4() {
    // symmetries of the square as permutations of its corners
    std::vector<int> rot = {1, 2, 3, 0};
    std::vector<int> flip = {1, 0, 3, 2};
    std::vector<std::vector<int>> elems;
    std::vector<int> cur = {0, 1, 2, 3};
    for (int i = 0; i < 4; ++i) {
        elems.push_back(cur);
        std::vector<int> flipped(4);
        for (int x = 0; x < 4; ++x) flipped[x] = cur[flip[x]];
        elems.push_back(flipped);
        std::vector<int> next(4);
        for (int x = 0; x < 4; ++x) next[x] = cur[rot[x]];
        cur = next;
    }
    std::sort(elems.begin(), elems.end());
    return group_from_permutations(elems);
}

FiniteGroup quaternion_group_q8() {
    // elements 1,-1,i,-i,j,-j,k,-k at indices 0..7
    auto neg = [](int x) { return x ^ 1; };
    const int I = 2, J = 4, K = 6;
    std::vector<int> t(64, -1);
    auto set = [&](int a, int b, int c) { t[a * 8 + b] = c; };
    for (int a = 0; a < 8; ++a) {
        set(0, a, a);
        set(a, 0, a);
        if (a >= 2) set(a, neg(a), 0), set(neg(a), a, 0);
    }
    set(1, 1, 0);
    auto fill = [&](int a, int b, int c) {
        // a*b=c propagated through all sign combinations
        set(a, b, c);
        set(neg(a), b, neg(c));
        set(a, neg(b), neg(c));
        set(neg(a), neg(b), c);
    };
    fill(I, I, 1);
    fill(J, J, 1);
    fill(K, K, 1);
    fill(I, J, K);
    fill(J, K, I);
    fill(K, I, J);
    fill(J, I, neg(K));
    fill(K, J, neg(I));
    fill(I, K, neg(J));
    for (int a = 2; a < 8; ++a) {
        set(1, a, neg(a));
        set(a, 1, neg(a));
    }
    return FiniteGroup(8, t, 0);
}

FiniteGroup trivial_group() { return FiniteGroup(1, {0}, 0); }

}  // namespace pog
