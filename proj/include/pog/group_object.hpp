#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pog/finite_group.hpp"
#include "pog/int_matrix.hpp"
#include "pog/lattice.hpp"

namespace pog {

enum class Backend { Finite, Block, Word };

std::string backend_name(Backend b);

// Element of a group object.  Finite and Block elements share the
// (free vector, finite index) shape; Word elements are integer matrices.
struct Elem {
    Vec free;
    int fin = 0;
    IntMatrix mat;
    bool is_word = false;

    bool operator==(const Elem& o) const {
        return is_word == o.is_word && free == o.free && fin == o.fin && mat == o.mat;
    }
    bool operator<(const Elem& o) const {
        if (free != o.free) return free < o.free;
        if (fin != o.fin) return fin < o.fin;
        return mat < o.mat;
    }
};

// Ball of a finitely generated matrix group, enumerated breadth-first up to
// a word-length bound.  Each element keeps one shortest defining word
// (letters: gen index i, or ~i for the inverse of generator i).
struct WordBall {
    std::vector<IntMatrix> elems;          // sorted by (word length, entries)
    std::vector<std::vector<int>> words;   // parallel to elems
    std::map<IntMatrix, int> index;
    int bound = 0;
};

struct WordGroup {
    int dim = 0;
    std::vector<IntMatrix> gens;
    std::vector<IntMatrix> gen_invs;
    std::vector<std::string> names;  // empty or one per generator
    int bound = 1;
    std::shared_ptr<const WordBall> ball;

    void enumerate();  // fills ball; gens must be invertible over Z
    std::string letter_name(int letter) const;
    std::string word_str(const std::vector<int>& w) const;
};

struct GroupObject {
    Backend backend = Backend::Finite;
    int rank = 0;        // Block free rank (0 for Finite)
    FiniteGroup fin;     // Finite carrier / Block finite component
    WordGroup word;

    static GroupObject finite(FiniteGroup g);
    static GroupObject block(int rank, FiniteGroup f);
    static GroupObject word_group(std::vector<IntMatrix> gens, int bound,
                                  std::vector<std::string> names = {});

    Elem identity() const;
    Elem op(const Elem& a, const Elem& b) const;
    Elem inverse(const Elem& a) const;
    Elem conj(const Elem& g, const Elem& x) const;  // g + x - g
    bool contains(const Elem& a) const;             // best effort for Word (ball lookup)

    // canonical comparison used for deterministic witnesses
    bool elem_less(const Elem& a, const Elem& b) const;
    std::string elem_str(const Elem& a) const;

    Elem block_elem(Vec v, int f = 0) const;
    Elem word_elem(const IntMatrix& m) const;
    std::optional<int> ball_index(const Elem& a) const;
    const std::vector<int>* word_of(const Elem& a) const;

    // small generating set of the carrier (block basis + finite generators,
    // or the word generators)
    std::vector<Elem> generators() const;
};

std::vector<int> finite_generating_set(const FiniteGroup& G);

}  // namespace pog
