#include "pog/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pog {

Cone Cone::finite_cone(std::vector<int> subset) {
    Cone c;
    c.backend = Backend::Finite;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    c.fin_part = std::move(subset);
    return c;
}

Cone Cone::block_cone(Lattice lattice, std::vector<Vec> pointed, Vec functional,
                      std::vector<int> fin_part) {
    Cone c;
    c.backend = Backend::Block;
    c.lattice = std::move(lattice);
    c.pointed = std::move(pointed);
    c.functional = std::move(functional);
    std::sort(fin_part.begin(), fin_part.end());
    fin_part.erase(std::unique(fin_part.begin(), fin_part.end()), fin_part.end());
    c.fin_part = std::move(fin_part);
    return c;
}

Cone Cone::word_cone(std::vector<IntMatrix> gens) {
    Cone c;
    c.backend = Backend::Word;
    c.wgens = std::move(gens);
    return c;
}

std::vector<int> monoid_closure(const FiniteGroup& F, const std::vector<int>& gens) {
    std::vector<char> in(F.n, 0);
    std::vector<int> work;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(F.identity);
    for (int g : gens) add(g);
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            add(F.op(work[i], work[j]));
            if (work.size() > size_t(F.n)) break;
        }
    std::vector<int> out;
    for (int x = 0; x < F.n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

namespace {

Verdict validate_finite_part(const std::vector<int>& part, const FiniteGroup& F) {
    std::vector<char> in(F.n, 0);
    for (int x : part) {
        if (x < 0 || x >= F.n) throw ModelError("cone finite part index out of range");
        in[x] = 1;
    }
    if (!in[F.identity]) return Verdict::fails("finite part misses the identity");
    for (int a : part)
        for (int b : part)
            if (!in[F.op(a, b)])
                return Verdict::fails("finite part not closed under the operation: " +
                                      std::to_string(a) + "+" + std::to_string(b));
    for (int g = 0; g < F.n; ++g)
        for (int a : part)
            if (!in[F.conj(g, a)])
                return Verdict::fails("finite part not closed under conjugation: conjugate of " +
                                      std::to_string(a) + " by " + std::to_string(g));
    return Verdict::holds();
}

// x = sum c_i * pointed_i + lattice residue, searched by remaining degree
bool free_member_search(const Cone& P, const Vec& v, const Int& budget, size_t idx, Vec& coeffs,
                        BlockFreeCert* cert) {
    if (idx == P.pointed.size()) {
        Vec residue = v;
        for (size_t i = 0; i < P.pointed.size(); ++i)
            residue = vec_sub(residue, vec_scale(coeffs[i], P.pointed[i]));
        auto lat = P.lattice.coefficients(residue);
        if (!lat) return false;
        if (cert) {
            cert->pointed_coeffs = coeffs;
            cert->lattice_coeffs = *lat;
        }
        return true;
    }
    Int deg = P.degree(P.pointed[idx]);
    for (Int c = 0; c * deg <= budget; ++c) {
        coeffs[idx] = c;
        if (free_member_search(P, v, budget - c * deg, idx + 1, coeffs, cert)) return true;
    }
    coeffs[idx] = 0;
    return false;
}

}  // namespace

std::optional<BlockFreeCert> block_free_member(const Cone& P, const Vec& v) {
    Int deg = P.degree(v);
    if (P.pointed.empty()) {
        auto lat = P.lattice.coefficients(v);
        if (!lat) return std::nullopt;
        return BlockFreeCert{{}, *lat};
    }
    if (deg < 0) return std::nullopt;
    Vec coeffs(P.pointed.size(), 0);
    BlockFreeCert cert;
    if (free_member_search(P, v, deg, 0, coeffs, &cert)) return cert;
    return std::nullopt;
}

void compute_word_closure(Cone& P, const GroupObject& G) {
    if (P.backend != Backend::Word) return;
    const auto& ball = *G.word.ball;
    auto data = std::make_shared<WordConeData>();
    data->in_set.assign(ball.elems.size(), 0);
    std::vector<int> work;
    auto add = [&](int idx) {
        if (!data->in_set[idx]) {
            data->in_set[idx] = 1;
            work.push_back(idx);
        }
    };
    add(ball.index.at(IntMatrix::identity(G.word.dim)));
    for (const auto& g : P.wgens) {
        auto it = ball.index.find(g);
        if (it == ball.index.end()) throw ModelError("word cone generator outside the enumeration bound");
        add(it->second);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        const IntMatrix& s = ball.elems[work[i]];
        // products with the current members, both orders
        for (size_t j = 0; j <= i; ++j) {
            const IntMatrix& t = ball.elems[work[j]];
            for (const IntMatrix& p : {s * t, t * s}) {
                auto it = ball.index.find(p);
                if (it != ball.index.end()) add(it->second);
            }
        }
        // conjugates by every ball element
        for (size_t g = 0; g < ball.elems.size(); ++g) {
            auto inv = ball.elems[g].inverse();
            if (!inv) continue;
            IntMatrix c = ball.elems[g] * s * *inv;
            auto it = ball.index.find(c);
            if (it != ball.index.end()) add(it->second);
        }
    }
    for (size_t i = 0; i < data->in_set.size(); ++i)
        if (data->in_set[i]) data->members.push_back(int(i));
    P.wclosure = std::move(data);
}

int cone_member3(const Cone& P, const GroupObject& G, const Elem& x) {
    if (P.backend == Backend::Word) {
        if (auto i = G.ball_index(x)) {
            if (P.wclosure && P.wclosure->in_set[*i]) return 1;
        }
        if (P.exact) return P.exact(x.mat) ? 1 : 0;
        return -1;
    }
    if (!std::binary_search(P.fin_part.begin(), P.fin_part.end(), x.fin)) return 0;
    if (G.rank == 0) return 1;
    return block_free_member(P, x.free) ? 1 : 0;
}

Verdict cone_member(const Cone& P, const GroupObject& G, const Elem& x) {
    if (P.backend == Backend::Word) {
        if (auto i = G.ball_index(x)) {
            if (P.wclosure && P.wclosure->in_set[*i])
                return Verdict::holds("word: " + G.word.word_str(G.word.ball->words[*i]));
        }
        if (P.exact)
            return P.exact(x.mat) ? Verdict::holds("exact membership predicate")
                                  : Verdict::fails(G.elem_str(x) + " rejected by exact membership predicate");
        return Verdict::unknown(G.word.bound, "not reached within closure bound");
    }
    if (!std::binary_search(P.fin_part.begin(), P.fin_part.end(), x.fin))
        return Verdict::fails("finite component " + std::to_string(x.fin) + " outside the cone");
    if (G.rank == 0) return Verdict::holds();
    auto cert = block_free_member(P, x.free);
    if (!cert) return Verdict::fails(vec_str(x.free) + " not in the free cone");
    std::ostringstream os;
    os << "pointed coeffs " << vec_str(cert->pointed_coeffs) << ", lattice coeffs "
       << vec_str(cert->lattice_coeffs);
    return Verdict::holds(os.str());
}

Verdict cone_validate(const Cone& P, const GroupObject& G) {
    if (P.backend != G.backend &&
        !(P.backend == Backend::Finite && G.backend == Backend::Block && G.rank == 0))
        throw ModelError("cone backend does not match group backend");
    if (G.backend == Backend::Word) {
        // conjugation and product closure can only be certified within the ball
        const auto& ball = *G.word.ball;
        if (!P.wclosure) throw ModelError("word cone closure not computed");
        for (int i : P.wclosure->members) {
            for (int j : P.wclosure->members) {
                IntMatrix p = ball.elems[i] * ball.elems[j];
                auto it = ball.index.find(p);
                if (it != ball.index.end() && !P.wclosure->in_set[it->second])
                    return Verdict::fails("closure not product-closed (internal)");
            }
        }
        if (P.exact) {
            for (int i : P.wclosure->members)
                if (!P.exact(ball.elems[i]))
                    return Verdict::fails("exact predicate rejects enumerated member " +
                                          G.word.word_str(ball.words[i]));
            return Verdict::holds("closure verified within bound " + std::to_string(G.word.bound) +
                                  "; membership exact");
        }
        return Verdict::unknown(G.word.bound, "conjugation closure verified within bound only");
    }
    // certificate first: malformed certificates are model errors, not Fails
    if (int(P.functional.size()) != G.rank) throw ModelError("positivity functional has wrong length");
    for (int j = 0; j < P.lattice.basis().cols(); ++j) {
        Vec u = P.lattice.basis().column(j);
        if (dot(P.functional, u) != 0)
            throw ModelError("positivity functional does not vanish on lattice generator " + vec_str(u));
    }
    for (const auto& g : P.pointed)
        if (dot(P.functional, g) < 1)
            throw ModelError("positivity functional below 1 on pointed generator " + vec_str(g));
    Verdict fin = validate_finite_part(P.fin_part, G.fin);
    if (!fin.is_holds()) return fin;
    return Verdict::holds("certificate verified; finite part checked exhaustively");
}

PogPtr make_pog(std::string name, GroupObject g, Cone c) {
    if (c.backend == Backend::Word) compute_word_closure(c, g);
    Verdict v = cone_validate(c, g);
    if (v.is_fails()) throw ModelError("cone for '" + name + "' invalid: " + v.witness());
    auto p = std::make_shared<PreorderedGroup>();
    p->name = std::move(name);
    p->group = std::move(g);
    p->cone = std::move(c);
    return p;
}

namespace {

// finds a functional lambda = K*y with small y, >= 1 on every candidate
std::optional<Vec> search_functional(int rank, const Lattice& L, const std::vector<Vec>& pointed,
                                     int radius) {
    if (pointed.empty()) return Vec(rank, 0);
    IntMatrix K = kernel_basis(L.basis().transpose());  // columns orthogonal to L
    int k = K.cols();
    if (k == 0) return std::nullopt;
    std::vector<long> y(k, -radius);
    while (true) {
        Vec lambda(rank, 0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < rank; ++i) lambda[i] += Int(y[j]) * K.at(i, j);
        bool ok = true;
        for (const auto& g : pointed)
            if (dot(lambda, g) < 1) { ok = false; break; }
        if (ok) return lambda;
        int pos = k - 1;
        while (pos >= 0 && y[pos] == radius) y[pos--] = -radius;
        if (pos < 0) return std::nullopt;
        ++y[pos];
    }
}

}  // namespace

Cone normalize_block_cone(int rank, const FiniteGroup& F, std::vector<Vec> lattice_gens,
                          std::vector<Vec> pointed_candidates, std::vector<int> fin_gens,
                          std::optional<Vec> lambda_hint, const ConeBuildOptions& opt) {
    Lattice L(rank, lattice_gens);
    std::vector<Vec> cands;
    auto refresh = [&]() {
        std::vector<Vec> keep;
        std::set<Vec> seen;
        for (auto& p : cands) {
            if (vec_is_zero(p) || L.contains(p)) continue;
            if (seen.insert(p).second) keep.push_back(p);
        }
        cands = std::move(keep);
    };
    cands = std::move(pointed_candidates);
    refresh();

    // saturation: a candidate whose negation is reachable is a unit and
    // belongs to the lattice part
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cands.size() && !changed; ++i) {
            Vec target = vec_neg(cands[i]);
            // bounded search: -p = sum c_j cands_j + lattice
            std::vector<Int> c(cands.size(), 0);
            std::function<bool(size_t, int, Vec)> rec = [&](size_t idx, int budget, Vec residue) {
                if (L.contains(residue)) return true;
                if (idx == cands.size() || budget == 0) return false;
                for (int take = 0; take <= budget; ++take) {
                    if (rec(idx + 1, budget - take, residue)) return true;
                    residue = vec_sub(residue, cands[idx]);
                }
                return false;
            };
            if (rec(0, opt.saturation_degree, target)) {
                L = L.sum(Lattice(rank, std::vector<Vec>{cands[i]}));
                changed = true;
            }
        }
        if (changed) refresh();
    }

    Vec lambda;
    bool have = false;
    if (lambda_hint && int(lambda_hint->size()) == rank) {
        bool ok = true;
        for (int j = 0; j < L.basis().cols(); ++j)
            if (dot(*lambda_hint, L.basis().column(j)) != 0) ok = false;
        for (const auto& g : cands)
            if (ok && dot(*lambda_hint, g) < 1) ok = false;
        if (ok) {
            lambda = *lambda_hint;
            have = true;
        }
    }
    if (!have) {
        auto found = search_functional(rank, L, cands, opt.covector_radius);
        if (!found)
            throw ModelError(
                "no positivity functional found for the image cone; supply lambda explicitly");
        lambda = *found;
        have = true;
    }

    std::vector<int> fin = monoid_closure(F, fin_gens);
    if (opt.require_conj_closed) {
        std::set<int> closed(fin.begin(), fin.end());
        std::vector<int> work(fin.begin(), fin.end());
        for (size_t i = 0; i < work.size(); ++i)
            for (int g = 0; g < F.n; ++g) {
                int c = F.conj(g, work[i]);
                if (closed.insert(c).second) work.push_back(c);
            }
        std::vector<int> full = monoid_closure(F, std::vector<int>(closed.begin(), closed.end()));
        fin = full;
    }
    return Cone::block_cone(std::move(L), std::move(cands), std::move(lambda), std::move(fin));
}

std::vector<Elem> cone_members_bounded(const PreorderedGroup& X, int deg_bound,
                                       int lattice_radius) {
    std::vector<Elem> out;
    const Cone& P = X.cone;
    const GroupObject& G = X.group;
    if (G.backend == Backend::Word) {
        for (int i : P.wclosure->members) out.push_back(G.word_elem(G.word.ball->elems[i]));
        return out;
    }
    // free-part vectors first
    std::set<Vec> frees;
    std::vector<Vec> stack;
    int np = int(P.pointed.size());
    std::vector<Int> c(np, 0);
    std::function<void(int, Int)> rec_pointed = [&](int idx, Int budget) {
        if (idx == np) {
            Vec base(G.rank, 0);
            for (int i = 0; i < np; ++i) base = vec_add(base, vec_scale(c[i], P.pointed[i]));
            // lattice coefficients in a symmetric window
            int nl = P.lattice.rank();
            std::vector<long> t(nl, -lattice_radius);
            while (true) {
                Vec v = base;
                for (int j = 0; j < nl; ++j)
                    v = vec_add(v, vec_scale(Int(t[j]), P.lattice.basis().column(j)));
                frees.insert(v);
                int pos = nl - 1;
                while (pos >= 0 && t[pos] == lattice_radius) t[pos--] = -lattice_radius;
                if (pos < 0) break;
                ++t[pos];
            }
            return;
        }
        Int deg = P.degree(P.pointed[idx]);
        for (Int k = 0; k * deg <= budget; ++k) {
            c[idx] = k;
            rec_pointed(idx + 1, budget - k * deg);
        }
        c[idx] = 0;
    };
    rec_pointed(0, Int(deg_bound));
    for (const auto& v : frees)
        for (int f : P.fin_part) out.push_back(G.block_elem(v, f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pog
