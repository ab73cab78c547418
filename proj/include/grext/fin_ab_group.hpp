#pragma once

#include "grext/matrix.hpp"

#include <string>
#include <vector>

namespace grext {

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors t_1 | t_2 | ..., each >= 2.
struct FinAbGroup {
	long free_rank = 0;
	std::vector<Int> torsion;

	bool is_zero() const { return free_rank == 0 && torsion.empty(); }

	friend bool operator==(const FinAbGroup &a, const FinAbGroup &b) = default;

	/// "0", "Z^3", "Z ⊕ Z/2", ...
	std::string str() const;
};

/// Homology at a module M of ... -> C_in -> M -> C_out -> ...:
/// ker(out) / im(in). Requires out * in = 0 (checked).
FinAbGroup homology_step(const IntMat &out, const IntMat &in);

/// Free rank of homology_step (Betti number), computed from ranks only.
long betti_step(const IntMat &out, const IntMat &in);

} // namespace grext
