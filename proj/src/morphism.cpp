#include "pog/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pog {

int finite_element_order(const FiniteGroup& F, int g) {
    int x = g, ord = 1;
    while (x != F.identity) {
        x = F.op(x, g);
        ++ord;
    }
    return ord;
}

int finite_power(const FiniteGroup& F, int g, const Int& e) {
    int ord = finite_element_order(F, g);
    Int r = e % ord;
    if (r < 0) r += ord;
    int out = F.identity;
    for (Int i = 0; i < r; ++i) out = F.op(out, g);
    return out;
}

bool PogMorphism::has_torsion_part() const {
    for (int t : tau)
        if (t != cod->group.fin.identity) return true;
    return false;
}

Elem PogMorphism::apply(const Elem& x) const {
    const GroupObject& D = dom->group;
    const GroupObject& C = cod->group;
    if (word_dom()) {
        const std::vector<int>* w = D.word_of(x);
        if (!w)
            throw PreconditionError("word element outside the enumeration bound cannot be mapped");
        return apply_word(*w);
    }
    Elem r;
    if (C.backend == Backend::Word) throw ModelError("block-to-word morphisms are not supported");
    r.free = A.apply(x.free);
    int t = C.fin.identity;
    for (int i = 0; i < D.rank; ++i)
        if (x.free[i] != 0) t = C.fin.op(t, finite_power(C.fin, tau[i], x.free[i]));
    r.fin = C.fin.op(t, phi[x.fin]);
    return r;
}

Elem PogMorphism::apply_word(const std::vector<int>& word) const {
    const GroupObject& C = cod->group;
    Elem acc = C.identity();
    for (int letter : word) {
        int gi = letter >= 0 ? letter : ~letter;
        Elem img = gen_images[gi];
        if (letter < 0) img = C.inverse(img);
        acc = C.op(acc, img);
    }
    return acc;
}

PogMorphism make_block_morphism(std::string name, PogPtr dom, PogPtr cod, IntMatrix A,
                                std::vector<int> phi, std::vector<int> tau) {
    PogMorphism m;
    m.name = std::move(name);
    m.dom = std::move(dom);
    m.cod = std::move(cod);
    if (m.dom->group.backend == Backend::Word || m.cod->group.backend == Backend::Word)
        throw ModelError("block morphism over word backend");
    if (A.rows() != m.cod->group.rank || A.cols() != m.dom->group.rank)
        throw ModelError("morphism matrix has wrong shape");
    if (int(phi.size()) != m.dom->group.fin.n) throw ModelError("finite map has wrong length");
    for (int v : phi)
        if (v < 0 || v >= m.cod->group.fin.n) throw ModelError("finite map image out of range");
    m.A = std::move(A);
    m.phi = std::move(phi);
    if (tau.empty()) tau.assign(m.dom->group.rank, m.cod->group.fin.identity);
    if (int(tau.size()) != m.dom->group.rank) throw ModelError("torsion component has wrong length");
    m.tau = std::move(tau);
    return m;
}

PogMorphism make_finite_morphism(std::string name, PogPtr dom, PogPtr cod, std::vector<int> fmap) {
    return make_block_morphism(std::move(name), std::move(dom), std::move(cod), IntMatrix(0, 0),
                               std::move(fmap));
}

PogMorphism make_word_morphism(std::string name, PogPtr dom, PogPtr cod,
                               std::vector<Elem> gen_images) {
    PogMorphism m;
    m.name = std::move(name);
    m.dom = std::move(dom);
    m.cod = std::move(cod);
    if (m.dom->group.backend != Backend::Word) throw ModelError("word morphism needs a word domain");
    if (gen_images.size() != m.dom->group.word.gens.size())
        throw ModelError("one image per word generator required");
    m.gen_images = std::move(gen_images);
    return m;
}

PogMorphism identity_morphism(PogPtr X) {
    if (X->group.backend == Backend::Word) {
        std::vector<Elem> imgs = X->group.generators();
        return make_word_morphism("id_" + X->name, X, X, imgs);
    }
    std::vector<int> phi(X->group.fin.n);
    for (int i = 0; i < X->group.fin.n; ++i) phi[i] = i;
    return make_block_morphism("id_" + X->name, X, X, IntMatrix::identity(X->group.rank), phi);
}

PogMorphism zero_morphism(PogPtr dom, PogPtr cod) {
    if (dom->group.backend == Backend::Word) {
        std::vector<Elem> imgs(dom->group.word.gens.size(), cod->group.identity());
        return make_word_morphism("0", dom, cod, imgs);
    }
    std::vector<int> phi(dom->group.fin.n, cod->group.fin.identity);
    return make_block_morphism("0", dom, cod, IntMatrix(cod->group.rank, dom->group.rank), phi);
}

PogMorphism compose(const PogMorphism& g, const PogMorphism& f) {
    if (f.cod.get() != g.dom.get() && f.cod->name != g.dom->name)
        throw ModelError("composition domain/codomain mismatch");
    if (f.word_dom()) {
        std::vector<Elem> imgs;
        for (const auto& im : f.gen_images) imgs.push_back(g.apply(im));
        return make_word_morphism(g.name + "." + f.name, f.dom, g.cod, imgs);
    }
    // block after block
    const FiniteGroup& FC = g.cod->group.fin;
    IntMatrix A = g.A * f.A;
    std::vector<int> phi(f.dom->group.fin.n);
    for (int x = 0; x < f.dom->group.fin.n; ++x) phi[x] = g.phi[f.phi[x]];
    std::vector<int> tau(f.dom->group.rank, FC.identity);
    for (int i = 0; i < f.dom->group.rank; ++i) {
        // g(tau_f(e_i)) * tau_g(A_f e_i)
        int t = g.phi[f.tau[i]];
        Vec col = f.A.column(i);
        for (int j = 0; j < g.dom->group.rank; ++j)
            if (col[j] != 0) t = FC.op(t, finite_power(FC, g.tau[j], col[j]));
        tau[i] = t;
    }
    return make_block_morphism(g.name + "." + f.name, f.dom, g.cod, std::move(A), std::move(phi),
                               std::move(tau));
}

namespace {

Verdict validate_block(const PogMorphism& m) {
    const FiniteGroup& FD = m.dom->group.fin;
    const FiniteGroup& FC = m.cod->group.fin;
    for (int a = 0; a < FD.n; ++a)
        for (int b = 0; b < FD.n; ++b)
            if (m.phi[FD.op(a, b)] != FC.op(m.phi[a], m.phi[b]))
                return Verdict::fails("finite map is not a homomorphism at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
    for (size_t i = 0; i < m.tau.size(); ++i) {
        for (size_t j = 0; j < m.tau.size(); ++j)
            if (FC.op(m.tau[i], m.tau[j]) != FC.op(m.tau[j], m.tau[i]))
                return Verdict::fails("torsion images do not commute");
        for (int x = 0; x < FD.n; ++x)
            if (FC.op(m.tau[i], m.phi[x]) != FC.op(m.phi[x], m.tau[i]))
                return Verdict::fails("torsion image does not commute with the finite map");
    }
    // cone restriction on the monoid generators of the domain cone
    const Cone& P = m.dom->cone;
    const Cone& Q = m.cod->cone;
    auto check_elem = [&](const Elem& x) -> std::optional<std::string> {
        Elem y = m.apply(x);
        if (cone_member3(Q, m.cod->group, y) != 1)
            return m.dom->group.elem_str(x) + " maps to " + m.cod->group.elem_str(y) +
                   " outside the codomain cone";
        return std::nullopt;
    };
    for (int j = 0; j < P.lattice.basis().cols(); ++j) {
        Vec u = P.lattice.basis().column(j);
        for (const Vec& v : {u, vec_neg(u)})
            if (auto w = check_elem(m.dom->group.block_elem(v))) return Verdict::fails(*w);
    }
    for (const auto& g : P.pointed)
        if (auto w = check_elem(m.dom->group.block_elem(g))) return Verdict::fails(*w);
    for (int f : P.fin_part)
        if (auto w = check_elem(m.dom->group.block_elem(Vec(m.dom->group.rank, 0), f)))
            return Verdict::fails(*w);
    return Verdict::holds("homomorphism law exhaustive on the finite part; cone generators mapped");
}

Verdict validate_word(const PogMorphism& m) {
    const GroupObject& D = m.dom->group;
    const auto& ball = *D.word.ball;
    // well-definedness: every ball coincidence must be respected
    std::vector<Elem> img(ball.elems.size());
    for (size_t i = 0; i < ball.elems.size(); ++i) img[i] = m.apply_word(ball.words[i]);
    const GroupObject& C = m.cod->group;
    for (size_t i = 0; i < ball.elems.size(); ++i) {
        for (int gi = 0; gi < int(D.word.gens.size()); ++gi)
            for (int dir = 0; dir < 2; ++dir) {
                IntMatrix next = ball.elems[i] * (dir ? D.word.gen_invs[gi] : D.word.gens[gi]);
                auto it = ball.index.find(next);
                if (it == ball.index.end()) continue;
                Elem gimg = m.gen_images[gi];
                if (dir) gimg = C.inverse(gimg);
                Elem lhs = C.op(img[i], gimg);
                if (!(lhs == img[it->second]))
                    return Verdict::fails("generator images break a relation at " +
                                          D.word.word_str(ball.words[i]) + " * " +
                                          D.word.letter_name(dir ? ~gi : gi));
            }
    }
    // cone restriction: listed generators (conjugates follow) or the closure
    const Cone& P = m.dom->cone;
    const Cone& Q = m.cod->cone;
    std::vector<int> to_check;
    if (!P.wgens.empty()) {
        for (const auto& g : P.wgens) to_check.push_back(ball.index.at(g));
    } else if (P.wclosure) {
        to_check = P.wclosure->members;
    }
    for (int i : to_check) {
        Elem y = m.apply_word(ball.words[i]);
        if (cone_member3(Q, C, y) == 0)
            return Verdict::fails("cone generator " + D.word.word_str(ball.words[i]) +
                                  " maps outside the codomain cone");
    }
    return Verdict::holds("relations verified within bound " + std::to_string(D.word.bound) +
                          "; cone generators mapped");
}

}  // namespace

Verdict morphism_validate(const PogMorphism& m) {
    if (m.word_dom()) return validate_word(m);
    if (m.cod->group.backend == Backend::Word) throw ModelError("block-to-word morphism");
    return validate_block(m);
}

bool equal_on_generators(const PogMorphism& f, const PogMorphism& g) {
    for (const Elem& x : f.dom->group.generators()) {
        if (!(f.apply(x) == g.apply(x))) return false;
    }
    return true;
}

Cone direct_image_cone(const PogMorphism& m, std::optional<Vec> lambda_hint) {
    const Cone& P = m.dom->cone;
    const GroupObject& C = m.cod->group;
    ConeBuildOptions opt;
    opt.require_conj_closed = false;
    if (m.word_dom()) {
        std::vector<Vec> pointed;
        std::vector<int> fin;
        auto add_image = [&](const Elem& y) {
            pointed.push_back(y.free);
            fin.push_back(y.fin);
        };
        const auto& ball = *m.dom->group.word.ball;
        if (!P.wgens.empty())
            for (const auto& g : P.wgens) add_image(m.apply_word(ball.words[ball.index.at(g)]));
        else if (P.wclosure)
            for (int i : P.wclosure->members) add_image(m.apply_word(ball.words[i]));
        if (!lambda_hint) lambda_hint = m.cod->cone.functional;
        return normalize_block_cone(C.rank, C.fin, {}, pointed, fin, lambda_hint, opt);
    }
    if (m.has_torsion_part() && C.rank > 0)
        throw UnsupportedError("direct image with torsion component and positive rank");
    std::vector<Vec> lattice_gens;
    for (int j = 0; j < P.lattice.basis().cols(); ++j)
        lattice_gens.push_back(m.A.apply(P.lattice.basis().column(j)));
    std::vector<Vec> pointed;
    for (const auto& g : P.pointed) pointed.push_back(m.A.apply(g));
    std::vector<int> fin;
    for (int f : P.fin_part) fin.push_back(m.phi[f]);
    if (m.has_torsion_part()) {
        // rank-0 codomain: every free generator image lands in the finite part
        for (int j = 0; j < P.lattice.basis().cols(); ++j) {
            Vec u = P.lattice.basis().column(j);
            for (const Vec& v : {u, vec_neg(u)}) fin.push_back(m.apply(m.dom->group.block_elem(v)).fin);
        }
        for (const auto& g : P.pointed) fin.push_back(m.apply(m.dom->group.block_elem(g)).fin);
    }
    if (!lambda_hint) lambda_hint = m.cod->cone.functional;
    return normalize_block_cone(C.rank, C.fin, lattice_gens, pointed, fin, lambda_hint, opt);
}

namespace {

bool block_mono(const PogMorphism& m) {
    if (kernel_basis(m.A).cols() > 0) return false;
    const FiniteGroup& FD = m.dom->group.fin;
    for (int x = 0; x < FD.n; ++x)
        if (x != FD.identity && m.phi[x] == m.cod->group.fin.identity) return false;
    return true;
}

bool block_epi(const PogMorphism& m) {
    const GroupObject& C = m.cod->group;
    Lattice img(C.rank, hnf(m.A));
    if (img.rank() != C.rank) return false;
    std::vector<int> gens;
    for (int x = 0; x < m.dom->group.fin.n; ++x) gens.push_back(m.phi[x]);
    IntMatrix K = kernel_basis(m.A);
    for (int j = 0; j < K.cols(); ++j) {
        Vec v = K.column(j);
        int t = C.fin.identity;
        for (int i = 0; i < m.dom->group.rank; ++i)
            if (v[i] != 0) t = C.fin.op(t, finite_power(C.fin, m.tau[i], v[i]));
        gens.push_back(t);
    }
    if (C.rank == 0)
        for (int t : m.tau) gens.push_back(t);
    return int(subgroup_closure(C.fin, gens).size()) == C.fin.n;
}

}  // namespace

MorphismFlags classify_morphism(const PogMorphism& m) {
    MorphismFlags fl;
    const GroupObject& C = m.cod->group;
    if (m.word_dom()) {
        fl.ball_qualified = true;
        const auto& ball = *m.dom->group.word.ball;
        fl.mono = true;
        for (size_t i = 1; i < ball.elems.size(); ++i) {
            Elem y = m.apply_word(ball.words[i]);
            bool is_id = C.backend == Backend::Word ? y == C.identity()
                                                    : (vec_is_zero(y.free) && y.fin == C.fin.identity);
            if (is_id) {
                fl.mono = false;
                break;
            }
        }
        if (C.backend == Backend::Word) {
            // epi iff the ball of the codomain is reachable; bound-qualified
            fl.epi = true;
            std::set<IntMatrix> hit;
            for (size_t i = 0; i < ball.elems.size(); ++i) hit.insert(m.apply_word(ball.words[i]).mat);
            for (const auto& g : C.word.gens)
                if (!hit.count(g)) fl.epi = false;
            fl.regular_epi = fl.epi;
            if (fl.regular_epi) {
                for (int ci : C.word.ball->elems.size() ? std::vector<int>{} : std::vector<int>{})
                    (void)ci;
                // cone surjectivity: every codomain cone generator must be an
                // image of a domain cone member
                std::set<IntMatrix> cone_imgs;
                if (m.dom->cone.wclosure)
                    for (int i : m.dom->cone.wclosure->members)
                        cone_imgs.insert(m.apply_word(ball.words[i]).mat);
                for (const auto& g : m.cod->cone.wgens)
                    if (!cone_imgs.count(g)) fl.regular_epi = false;
            }
            return fl;
        }
        // word -> block
        if (C.fin.n > 1 && !C.fin.is_abelian())
            throw UnsupportedError("word morphism into a nonabelian finite component");
        std::vector<Vec> ucols;
        std::vector<int> tparts;
        for (const auto& im : m.gen_images) {
            ucols.push_back(im.free);
            tparts.push_back(im.fin);
        }
        IntMatrix U = IntMatrix::from_columns(C.rank, ucols);
        Lattice span(C.rank, U);
        fl.epi = span.rank() == C.rank;
        if (fl.epi) {
            std::vector<int> fgens;
            IntMatrix K = kernel_basis(U);
            for (int j = 0; j < K.cols(); ++j) {
                int t = C.fin.identity;
                for (int i = 0; i < K.rows(); ++i)
                    if (K.at(i, j) != 0) t = C.fin.op(t, finite_power(C.fin, tparts[i], K.at(i, j)));
                fgens.push_back(t);
            }
            fl.epi = int(subgroup_closure(C.fin, fgens).size()) == C.fin.n;
        }
        fl.regular_epi = false;
        if (fl.epi) {
            Cone img = direct_image_cone(m);
            fl.regular_epi = true;
            const Cone& Q = m.cod->cone;
            for (int j = 0; j < Q.lattice.basis().cols() && fl.regular_epi; ++j) {
                Vec u = Q.lattice.basis().column(j);
                if (!block_free_member(img, u) || !block_free_member(img, vec_neg(u)))
                    fl.regular_epi = false;
            }
            for (const auto& g : Q.pointed)
                if (fl.regular_epi && !block_free_member(img, g)) fl.regular_epi = false;
            for (int f : Q.fin_part)
                if (!std::binary_search(img.fin_part.begin(), img.fin_part.end(), f))
                    fl.regular_epi = false;
        }
        return fl;
    }

    fl.mono = block_mono(m);
    fl.epi = block_epi(m);
    fl.regular_epi = false;
    if (fl.epi) {
        bool cone_onto = true;
        if (m.has_torsion_part() && C.rank > 0) {
            throw UnsupportedError("cone surjectivity with torsion component and positive rank");
        }
        Cone img = direct_image_cone(m);
        const Cone& Q = m.cod->cone;
        for (int j = 0; j < Q.lattice.basis().cols() && cone_onto; ++j) {
            Vec u = Q.lattice.basis().column(j);
            if (!block_free_member(img, u) || !block_free_member(img, vec_neg(u))) cone_onto = false;
        }
        for (const auto& g : Q.pointed)
            if (cone_onto && !block_free_member(img, g)) cone_onto = false;
        for (int f : Q.fin_part)
            if (!std::binary_search(img.fin_part.begin(), img.fin_part.end(), f)) cone_onto = false;
        fl.regular_epi = cone_onto;
    }
    return fl;
}

}  // namespace pog
