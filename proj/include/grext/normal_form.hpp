#pragma once

#include "grext/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace grext {

struct HnfResult {
	IntMat h; ///< row Hermite normal form: echelon, positive pivots,
	          ///< entries above each pivot reduced into [0, pivot)
	IntMat u; ///< unimodular transform with h == u * m
};

/// Row Hermite normal form with transform.
HnfResult hnf(const IntMat &m);

/// Invariant factors d_1 | d_2 | ... | d_r (all > 0, r = rank). Trivial
/// factors 1 are included; zero diagonal entries are not reported.
std::vector<Int> snf(const IntMat &m);

/// Exact rank (over Q, equivalently over Z since kernels are saturated).
long rank(const IntMat &m);

/// Basis of the kernel lattice {x : m x = 0}, returned as columns. The
/// kernel of an integer matrix is saturated, so this is a basis of the
/// full rational kernel intersected with the integer lattice.
IntMat kernel_basis(const IntMat &m);

/// Solve a * x = b exactly over Z for every column of b; requires a to have
/// full column rank and every column of b to lie in the column lattice of a.
/// Throws std::runtime_error otherwise.
IntMat solve_exact(const IntMat &a, const IntMat &b);

/// Incremental row-echelon builder over Z. Rows are inserted one at a time;
/// the generated lattice is maintained under unimodular row operations, so
/// `rank` and `quotient_torsion` are exact for the lattice spanned by all
/// inserted rows.
class LatticeBuilder {
public:
	explicit LatticeBuilder(long cols) : cols_(cols) {}

	/// Insert a row; returns true if it increased the rank.
	bool insert(std::vector<Int> v);

	long rank() const { return static_cast<long>(rows_.size()); }
	long cols() const { return cols_; }

	/// Rows of a basis of the lattice, as a matrix in echelon form
	/// (fully reduced, canonical).
	IntMat basis_matrix() const;

	/// Invariant factors > 1 of Z^cols / lattice.
	std::vector<Int> quotient_torsion() const;

private:
	long cols_;
	std::map<long, std::vector<Int>> rows_; // pivot column -> row
};

/// Sparse exact rank computation for large, very sparse systems (naturality
/// constraints, ball presentations). Row scaling by content is applied, which
/// preserves rank but not the lattice.
class SparseEliminator {
public:
	explicit SparseEliminator(long cols) : cols_(cols) {}

	bool insert(SparseVec v);
	long rank() const { return static_cast<long>(rows_.size()); }

private:
	long cols_;
	std::map<long, SparseVec> rows_; // pivot column -> reduced row
};

} // namespace grext
