#pragma once

#include "grext/cross_effect.hpp"
#include "grext/fin_ab_group.hpp"

namespace grext {

struct NatHomResult {
	FinAbGroup group;   // free: the solution lattice of a linear system
	bool stable = false; // rank unchanged between bounds K and K+1
	long constraints = 0;
	long unknowns = 0;
};

/// Brute-force oracle for natural transformations F -> G: solves the
/// naturality system over all ranks <= K against the fixed generating set of
/// morphisms (all bar cofaces, folds, adjacent generator swaps, and the
/// first-generator inversion at each rank <= K). Stability is reported by
/// re-solving at K+1.
NatHomResult nat_hom_oracle(const ExprPtr &f, const ExprPtr &g, int K,
                            bool check_stability = true);

/// Hom(q_n(P-bar), F) computed as the kernel of
/// cr_1 F(Z) -> cr_{n+1} F(Z,...,Z) induced by the (n+1)-fold multiplication.
FinAbGroup hom_passi(int n, const ExprPtr &f);

} // namespace grext
