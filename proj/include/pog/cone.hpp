#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "pog/group_object.hpp"
#include "pog/verdict.hpp"

namespace pog {

// Witness data for membership in the free part of a block cone:
// x = sum(pointed_coeffs[i] * pointed[i]) + sum(lattice_coeffs[j] * basis[j]).
struct BlockFreeCert {
    Vec pointed_coeffs;
    Vec lattice_coeffs;
};

struct WordConeData {
    std::vector<int> members;  // sorted ball indices
    std::vector<char> in_set;  // indexed by ball position
};

// Positive cone of a group object.
//   Finite: fin_part is the whole cone (subset of F).
//   Block:  free part is lattice + N-span(pointed), certified by the
//           functional (0 on the lattice, >= 1 on each pointed generator),
//           times the finite component fin_part.
//   Word:   generator list closed within the ball; an optional exact
//           membership predicate upgrades bound-qualified answers.
struct Cone {
    Backend backend = Backend::Finite;
    std::vector<int> fin_part = {0};
    Lattice lattice;
    std::vector<Vec> pointed;
    Vec functional;
    std::vector<IntMatrix> wgens;
    std::shared_ptr<const WordConeData> wclosure;
    std::function<bool(const IntMatrix&)> exact;  // empty when absent

    static Cone finite_cone(std::vector<int> subset);
    static Cone block_cone(Lattice lattice, std::vector<Vec> pointed, Vec functional,
                           std::vector<int> fin_part);
    static Cone word_cone(std::vector<IntMatrix> gens);

    Int degree(const Vec& v) const { return dot(functional, v); }
};

struct PreorderedGroup {
    std::string name;
    GroupObject group;
    Cone cone;
};
using PogPtr = std::shared_ptr<const PreorderedGroup>;

// Validates the cone against the object and freezes the word closure.
PogPtr make_pog(std::string name, GroupObject g, Cone c);

Verdict cone_validate(const Cone& P, const GroupObject& G);
Verdict cone_member(const Cone& P, const GroupObject& G, const Elem& x);

// tri-valued fast path: 1 member, 0 definitely not, -1 unknown within bound
int cone_member3(const Cone& P, const GroupObject& G, const Elem& x);

std::optional<BlockFreeCert> block_free_member(const Cone& P, const Vec& v);

void compute_word_closure(Cone& P, const GroupObject& G);

struct ConeBuildOptions {
    int covector_radius = 5;     // search radius for the functional coefficients
    int saturation_degree = 4;   // coefficient budget when hunting unit generators
    bool require_conj_closed = true;
};

// Canonical block cone from raw generator data: saturates pointed candidates
// whose negation is reachable into the lattice part, then finds or verifies
// a positivity functional.  Throws ModelError when no functional is found.
Cone normalize_block_cone(int rank, const FiniteGroup& F, std::vector<Vec> lattice_gens,
                          std::vector<Vec> pointed_candidates, std::vector<int> fin_gens,
                          std::optional<Vec> lambda_hint, const ConeBuildOptions& opt = {});

// Elements of the cone with functional degree at most deg_bound and lattice
// coefficients at most lattice_radius in absolute value (all of the cone for
// the finite backend, the frozen closure for word cones).  Sorted.
std::vector<Elem> cone_members_bounded(const PreorderedGroup& X, int deg_bound,
                                       int lattice_radius);

// monoid closure of a subset of a finite group (with identity)
std::vector<int> monoid_closure(const FiniteGroup& F, const std::vector<int>& gens);

}  // namespace pog
