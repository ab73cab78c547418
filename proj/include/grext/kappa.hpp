#pragma once

#include "grext/group_ring.hpp"

namespace grext {

struct KappaReport {
	long rank = 0;        // rank of the product span at word-length bound l
	long rank_prev = 0;   // same at l-1
	long target_rank = 0; // rank of I^{d+1}/I^{N+1}
	bool stable = false;
};

/// Rank of the span of the products (g_0-1)(g_1-1)...(g_d-1) in
/// Z[G^n]/I^{N+1}, over tuples of elements of G^n of word length <= l,
/// where G is free of rank m. By multilinearity this equals the (d+1)-fold
/// product of the lattice spanned by {[g]-[1] : |g| <= l}. Expected to equal
/// the rank of I^{d+1}/I^{N+1} for l large enough. Requires N >= d+1.
KappaReport kappa_image_rank(int d, int N, long l, int n, int m,
                             long max_ball = 200000);

/// Elementwise identity behind the kappa transformation: for a tuple
/// (g_0,...,g_d) of elements of G^n,
///   sum_{I subset {0..d}} (-1)^{|I|} [prod_{j in I} g_j]
///     = (-1)^{d+1} (g_0-1)(g_1-1)...(g_d-1).
/// Returns true if the two sides agree in the truncated ring.
bool kappa_identity_holds(const TruncGroupRing &ring,
                          const std::vector<GroupElement> &tuple);

} // namespace grext
