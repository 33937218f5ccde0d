#include "pog/group_object.hpp"

#include <algorithm>
#include <sstream>

#include "pog/verdict.hpp"

namespace pog {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Finite: return "finite";
        case Backend::Block: return "block";
        default: return "word";
    }
}

void WordGroup::enumerate() {
    if (bound < 1) throw ModelError("word bound must be >= 1");
    gen_invs.clear();
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim) throw ModelError("word generator dimension mismatch");
        auto inv = g.inverse();
        if (!inv) throw ModelError("word generator is not invertible over the integers");
        gen_invs.push_back(*inv);
    }
    auto b = std::make_shared<WordBall>();
    b->bound = bound;
    IntMatrix id = IntMatrix::identity(dim);
    b->index[id] = 0;
    b->elems.push_back(id);
    b->words.push_back({});
    size_t frontier_begin = 0;
    for (int len = 1; len <= bound; ++len) {
        size_t frontier_end = b->elems.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (int gi = 0; gi < int(gens.size()); ++gi) {
                for (int dir = 0; dir < 2; ++dir) {
                    IntMatrix next = b->elems[i] * (dir ? gen_invs[gi] : gens[gi]);
                    if (b->index.count(next)) continue;
                    b->index[next] = int(b->elems.size());
                    b->elems.push_back(next);
                    auto w = b->words[i];
                    w.push_back(dir ? ~gi : gi);
                    b->words.push_back(std::move(w));
                }
            }
        }
        frontier_begin = frontier_end;
    }
    // canonical order: word length, then matrix entries
    std::vector<int> order(b->elems.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (b->words[x].size() != b->words[y].size()) return b->words[x].size() < b->words[y].size();
        return b->elems[x] < b->elems[y];
    });
    WordBall sorted;
    sorted.bound = bound;
    for (int i : order) {
        sorted.index[b->elems[i]] = int(sorted.elems.size());
        sorted.elems.push_back(b->elems[i]);
        sorted.words.push_back(b->words[i]);
    }
    ball = std::make_shared<WordBall>(std::move(sorted));
}

std::string WordGroup::letter_name(int letter) const {
    int gi = letter >= 0 ? letter : ~letter;
    std::string base = (gi < int(names.size())) ? names[gi] : "g" + std::to_string(gi);
    return letter >= 0 ? base : base + "^-1";
}

std::string WordGroup::word_str(const std::vector<int>& w) const {
    if (w.empty()) return "identity";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int gi = w[i] >= 0 ? w[i] : ~w[i];
        std::string base = (gi < int(names.size())) ? names[gi] : "g" + std::to_string(gi);
        long exp = long(j - i) * (w[i] >= 0 ? 1 : -1);
        if (!first) os << "*";
        os << base;
        if (exp != 1) os << "^" << exp;
        first = false;
        i = j;
    }
    return os.str();
}

GroupObject GroupObject::finite(FiniteGroup g) {
    GroupObject o;
    o.backend = Backend::Finite;
    o.rank = 0;
    o.fin = std::move(g);
    return o;
}

GroupObject GroupObject::block(int rank, FiniteGroup f) {
    if (rank < 0) throw ModelError("negative free rank");
    GroupObject o;
    o.backend = Backend::Block;
    o.rank = rank;
    o.fin = std::move(f);
    return o;
}

GroupObject GroupObject::word_group(std::vector<IntMatrix> gens, int bound,
                                    std::vector<std::string> names) {
    if (gens.empty()) throw ModelError("word group needs at least one generator");
    GroupObject o;
    o.backend = Backend::Word;
    o.word.dim = gens[0].rows();
    o.word.gens = std::move(gens);
    o.word.names = std::move(names);
    o.word.bound = bound;
    o.word.enumerate();
    return o;
}

Elem GroupObject::identity() const {
    Elem e;
    if (backend == Backend::Word) {
        e.is_word = true;
        e.mat = IntMatrix::identity(word.dim);
    } else {
        e.free.assign(rank, Int(0));
        e.fin = fin.identity;
    }
    return e;
}

Elem GroupObject::op(const Elem& a, const Elem& b) const {
    Elem r;
    if (backend == Backend::Word) {
        r.is_word = true;
        r.mat = a.mat * b.mat;
    } else {
        r.free = vec_add(a.free, b.free);
        r.fin = fin.op(a.fin, b.fin);
    }
    return r;
}

Elem GroupObject::inverse(const Elem& a) const {
    Elem r;
    if (backend == Backend::Word) {
        r.is_word = true;
        auto inv = a.mat.inverse();
        if (!inv) throw ModelError("word element not invertible");
        r.mat = *inv;
    } else {
        r.free = vec_neg(a.free);
        r.fin = fin.inverse(a.fin);
    }
    return r;
}

Elem GroupObject::conj(const Elem& g, const Elem& x) const { return op(op(g, x), inverse(g)); }

bool GroupObject::contains(const Elem& a) const {
    if (backend == Backend::Word) return a.is_word && a.mat.rows() == word.dim;
    return !a.is_word && int(a.free.size()) == rank && a.fin >= 0 && a.fin < fin.n;
}

bool GroupObject::elem_less(const Elem& a, const Elem& b) const {
    if (backend == Backend::Word) {
        auto ia = ball_index(a), ib = ball_index(b);
        if (ia && ib) return *ia < *ib;
        if (ia != ib) return ia.has_value();  // ball elements sort first
        return a.mat < b.mat;
    }
    return a < b;
}

std::string GroupObject::elem_str(const Elem& a) const {
    if (backend == Backend::Word) {
        if (auto i = ball_index(a)) return word.word_str(word.ball->words[*i]);
        return a.mat.str();
    }
    if (backend == Backend::Finite) return std::to_string(a.fin);
    if (rank == 0) return fin.n > 1 ? "f" + std::to_string(a.fin) : "0";
    std::string s = vec_str(a.free);
    if (fin.n > 1) s.insert(s.size() - 1, "|f" + std::to_string(a.fin));
    return s;
}

Elem GroupObject::block_elem(Vec v, int f) const {
    Elem e;
    e.free = std::move(v);
    e.fin = f;
    if (int(e.free.size()) != rank || f < 0 || f >= fin.n)
        throw ModelError("block element out of range");
    return e;
}

Elem GroupObject::word_elem(const IntMatrix& m) const {
    Elem e;
    e.is_word = true;
    e.mat = m;
    return e;
}

std::optional<int> GroupObject::ball_index(const Elem& a) const {
    if (backend != Backend::Word || !a.is_word || !word.ball) return std::nullopt;
    auto it = word.ball->index.find(a.mat);
    if (it == word.ball->index.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>* GroupObject::word_of(const Elem& a) const {
    auto i = ball_index(a);
    if (!i) return nullptr;
    return &word.ball->words[*i];
}

std::vector<Elem> GroupObject::generators() const {
    std::vector<Elem> out;
    if (backend == Backend::Word) {
        for (const auto& g : word.gens) {
            Elem e;
            e.is_word = true;
            e.mat = g;
            out.push_back(e);
        }
        return out;
    }
    for (int i = 0; i < rank; ++i) {
        Vec v(rank, 0);
        v[i] = 1;
        out.push_back(block_elem(v));
    }
    for (int g : finite_generating_set(fin)) {
        Vec v(rank, 0);
        out.push_back(block_elem(v, g));
    }
    return out;
}

std::vector<int> finite_generating_set(const FiniteGroup& G) {
    // greedy generating set; fine for catalog-sized groups
    std::vector<int> gens;
    std::vector<int> have = subgroup_closure(G, {});
    while (int(have.size()) < G.n) {
        int pick = -1;
        for (int x = 0; x < G.n; ++x)
            if (!std::binary_search(have.begin(), have.end(), x)) { pick = x; break; }
        gens.push_back(pick);
        have = subgroup_closure(G, gens);
    }
    return gens;
}

}  // namespace pog
