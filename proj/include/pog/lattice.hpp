#pragma once

#include <optional>

#include "pog/int_matrix.hpp"

namespace pog {

// Sublattice of Z^ambient_rank, basis kept as the columns of an HNF matrix
// (so equal lattices have equal representations).
class Lattice {
  public:
    Lattice() : ambient_(0) {}
    explicit Lattice(int ambient_rank) : ambient_(ambient_rank), basis_(ambient_rank, 0) {}
    Lattice(int ambient_rank, const IntMatrix& generators);
    Lattice(int ambient_rank, const std::vector<Vec>& generators);

    static Lattice full(int ambient_rank) { return Lattice(ambient_rank, IntMatrix::identity(ambient_rank)); }

    int ambient_rank() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    bool is_zero() const { return basis_.cols() == 0; }

    bool contains(const Vec& v) const;
    std::optional<Vec> coefficients(const Vec& v) const;  // v = basis * coeffs

    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool subset_of(const Lattice& o) const;

    Lattice sum(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;

    // Index [Z^n : L] for full-rank L; nullopt when rank deficient.
    std::optional<Int> index() const;

    std::string str() const { return basis_.str(); }

  private:
    int ambient_;
    IntMatrix basis_;
};

bool lattice_member(const Lattice& L, const Vec& v);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

}  // namespace pog
