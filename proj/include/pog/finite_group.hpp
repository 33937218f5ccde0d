#pragma once

#include <string>
#include <vector>

#include "pog/verdict.hpp"

namespace pog {

// Finite group on dense element indices 0..n-1.  Catalog groups always put
// the identity at index 0; validation accepts any identity index.
struct FiniteGroup {
    int n = 1;
    std::vector<int> table;  // n*n, row-major: table[a*n+b] = a+b
    int identity = 0;
    std::vector<int> inv;

    FiniteGroup();
    FiniteGroup(int order, std::vector<int> op_table, int id);

    int op(int a, int b) const { return table[a * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int conj(int g, int x) const { return op(op(g, x), inv[g]); }  // g + x - g
    bool is_abelian() const;
};

Verdict validate_group_table(const std::vector<int>& table, int order, int identity);

// subgroup generated by the seed elements (always contains the identity)
std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> seed);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& S);
bool is_normal_subgroup(const FiniteGroup& G, const std::vector<int>& S);
std::vector<int> normal_closure(const FiniteGroup& G, const std::vector<int>& seed);

std::vector<int> commutator_subgroup(const FiniteGroup& G);
std::vector<int> center(const FiniteGroup& G);

struct QuotientResult {
    FiniteGroup group;
    std::vector<int> map;  // element -> coset index; cosets ordered by minimal member
};
QuotientResult quotient_group(const FiniteGroup& G, const std::vector<int>& N);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& G);

// standard constructions
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup symmetric_group(int n);  // n <= 5
FiniteGroup dihedral_group_d4();
FiniteGroup quaternion_group_q8();
FiniteGroup trivial_group();

}  // namespace pog
