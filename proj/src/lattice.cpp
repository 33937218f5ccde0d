#include "pog/lattice.hpp"

#include "pog/verdict.hpp"

namespace pog {

Lattice::Lattice(int ambient_rank, const IntMatrix& generators) : ambient_(ambient_rank) {
    if (generators.cols() > 0 && generators.rows() != ambient_rank)
        throw ModelError("lattice generators have wrong dimension");
    basis_ = hnf(generators.cols() ? generators : IntMatrix(ambient_rank, 0));
}

Lattice::Lattice(int ambient_rank, const std::vector<Vec>& generators)
    : Lattice(ambient_rank, IntMatrix::from_columns(ambient_rank, generators)) {}

bool Lattice::contains(const Vec& v) const { return coefficients(v).has_value(); }

std::optional<Vec> Lattice::coefficients(const Vec& v) const {
    if (int(v.size()) != ambient_) throw ModelError("lattice membership dimension mismatch");
    if (basis_.cols() == 0) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(basis_, v);
}

bool Lattice::subset_of(const Lattice& o) const {
    for (int j = 0; j < basis_.cols(); ++j)
        if (!o.contains(basis_.column(j))) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& o) const {
    if (ambient_ != o.ambient_) throw ModelError("lattice sum rank mismatch");
    return Lattice(ambient_, basis_.hstack(o.basis_));
}

Lattice Lattice::intersect(const Lattice& o) const {
    if (ambient_ != o.ambient_) throw ModelError("lattice intersect rank mismatch");
    if (basis_.cols() == 0 || o.basis_.cols() == 0) return Lattice(ambient_);
    // kernel of the stacked basis [B1 | -B2]; the B1-part of each kernel
    // vector gives coefficients of an intersection generator
    IntMatrix neg(ambient_, o.basis_.cols());
    for (int i = 0; i < ambient_; ++i)
        for (int j = 0; j < o.basis_.cols(); ++j) neg.at(i, j) = -o.basis_.at(i, j);
    IntMatrix ker = kernel_basis(basis_.hstack(neg));
    IntMatrix gens(ambient_, ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        Vec coeff(basis_.cols());
        for (int i = 0; i < basis_.cols(); ++i) coeff[i] = ker.at(i, j);
        Vec g = basis_.apply(coeff);
        for (int i = 0; i < ambient_; ++i) gens.at(i, j) = g[i];
    }
    return Lattice(ambient_, gens);
}

std::optional<Int> Lattice::index() const {
    if (basis_.cols() != ambient_) return std::nullopt;
    Int d = basis_.determinant();
    return d < 0 ? -d : d;
}

bool lattice_member(const Lattice& L, const Vec& v) { return L.contains(v); }

Lattice lattice_intersect(const Lattice& a, const Lattice& b) { return a.intersect(b); }

}  // namespace pog
