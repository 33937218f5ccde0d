#pragma once

#include "pog/morphism.hpp"

namespace pog {

struct ProductData {
    PogPtr obj;
    PogMorphism p1, p2;
};

struct EqualizerData {
    PogPtr obj;
    PogMorphism inclusion;
};

struct PullbackData {
    PogPtr obj;
    PogMorphism p1, p2;
    // block realization: embedding of the corner coordinates into the
    // ambient product, and the finite pair indexing
    IntMatrix embed;                         // (rX+rY) x rank(corner)
    std::vector<std::pair<int, int>> pairs;  // corner finite index -> (a, b)
};

struct QuotientData {
    PogPtr obj;
    PogMorphism q;  // regular epi onto obj
};

// kernel-style normal subobject description (block form; finite backend has
// rank 0); the cone is derived as subgroup intersect ambient cone
struct NormalSubobject {
    PogPtr ambient;
    Lattice lat;
    std::vector<int> fin;  // sorted subgroup of the finite component
};

struct PogSquare {
    // right . top = bottom . left, corner = dom(top) = dom(left)
    PogMorphism top;     // corner -> A
    PogMorphism left;    // corner -> B
    PogMorphism right;   // A -> Z
    PogMorphism bottom;  // B -> Z
};

ProductData product(PogPtr X, PogPtr Y);
EqualizerData equalizer(const PogMorphism& m1, const PogMorphism& m2);
PullbackData pullback(const PogMorphism& m1, const PogMorphism& m2);
PullbackData kernel_pair(const PogMorphism& m);  // also handles word morphisms

NormalSubobject kernel(const PogMorphism& m);
bool subobject_contains(const NormalSubobject& S, const Elem& x);

QuotientData cokernel(const PogMorphism& m);
QuotientData coequalizer(const PogMorphism& m1, const PogMorphism& m2);

// factor g through a quotient q of its domain (g must kill ker q on
// generators); used for the coequalizer exactness checks
PogMorphism factor_through_quotient(const QuotientData& q, const PogMorphism& g);

Verdict is_pullback_square(const PogSquare& sq);

// mediating morphism into a computed pullback from a commuting cone (a, b)
std::optional<PogMorphism> mediate_to_pullback(const PullbackData& pb, const PogMorphism& a,
                                               const PogMorphism& b);

// comparison isomorphism test between two objects along a given morphism:
// bijective group map carrying the cone onto the cone, both ways
Verdict is_isomorphism(const PogMorphism& u);

// finite subgroup as a standalone FiniteGroup; sub[i] lists the ambient
// element of the i-th subgroup element (identity first)
std::pair<FiniteGroup, std::vector<int>> finite_subgroup_group(const FiniteGroup& F,
                                                               const std::vector<int>& subset);

}  // namespace pog
