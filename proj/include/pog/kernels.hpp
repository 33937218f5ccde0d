#pragma once

#include <optional>
#include <vector>

namespace pog::kernels {

struct Triple {
    int a, b, c;
    bool operator==(const Triple&) const = default;
};

// Lexicographically smallest triple breaking associativity, if any.
// The _serial variants are the reference implementations the OpenMP
// kernels are tested against.
std::optional<Triple> assoc_violation(const std::vector<int>& table, int n);
std::optional<Triple> assoc_violation_serial(const std::vector<int>& table, int n);

// Condition-(*) scan over a cone subset of a finite group: smallest triple
// (a,b,c) of cone elements with a-b in the derived subgroup, f(b) = f(c),
// and a - b + c outside the cone.
std::optional<Triple> star_violation(const std::vector<int>& table, int n,
                                     const std::vector<int>& cone,
                                     const std::vector<char>& in_cone,
                                     const std::vector<char>& in_derived,
                                     const std::vector<int>& fmap,
                                     const std::vector<int>& inv);
std::optional<Triple> star_violation_serial(const std::vector<int>& table, int n,
                                            const std::vector<int>& cone,
                                            const std::vector<char>& in_cone,
                                            const std::vector<char>& in_derived,
                                            const std::vector<int>& fmap,
                                            const std::vector<int>& inv);

void set_parallel_threads(int n);
int parallel_threads();

}  // namespace pog::kernels
