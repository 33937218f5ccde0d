#pragma once

#include "pog/cone.hpp"

namespace pog {

struct MorphismFlags {
    bool mono = false;
    bool epi = false;
    bool regular_epi = false;
    bool ball_qualified = false;  // word-domain classification is exact only on the ball
};

// Morphism of preordered groups.  Block form is (A, phi, tau) acting as
// (v, g) |-> (A v, tau(v) * phi(g)); tau is the torsion component quotient
// maps need (identity everywhere for ordinary block morphisms).  Word-domain
// morphisms are given by generator images.
struct PogMorphism {
    std::string name;
    PogPtr dom, cod;
    IntMatrix A;
    std::vector<int> phi;
    std::vector<int> tau;
    std::vector<Elem> gen_images;

    bool word_dom() const { return dom->group.backend == Backend::Word; }
    bool has_torsion_part() const;
    Elem apply(const Elem& x) const;
    Elem apply_word(const std::vector<int>& word) const;  // by letters, word domain
};

PogMorphism make_block_morphism(std::string name, PogPtr dom, PogPtr cod, IntMatrix A,
                                std::vector<int> phi, std::vector<int> tau = {});
PogMorphism make_finite_morphism(std::string name, PogPtr dom, PogPtr cod, std::vector<int> fmap);
PogMorphism make_word_morphism(std::string name, PogPtr dom, PogPtr cod,
                               std::vector<Elem> gen_images);
PogMorphism identity_morphism(PogPtr X);
PogMorphism zero_morphism(PogPtr dom, PogPtr cod);
PogMorphism compose(const PogMorphism& g, const PogMorphism& f);  // g after f

Verdict morphism_validate(const PogMorphism& m);
MorphismFlags classify_morphism(const PogMorphism& m);

// true when both maps agree on every generator of the common domain
bool equal_on_generators(const PogMorphism& f, const PogMorphism& g);

// image of the domain cone as a raw block cone (no conjugation-closure
// requirement); used for cone-surjectivity decisions
Cone direct_image_cone(const PogMorphism& m, std::optional<Vec> lambda_hint = std::nullopt);

int finite_element_order(const FiniteGroup& F, int g);
int finite_power(const FiniteGroup& F, int g, const Int& e);

}  // namespace pog
