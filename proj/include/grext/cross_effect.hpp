#pragma once

#include "grext/fin_ab_group.hpp"
#include "grext/functor_eval.hpp"

#include <memory>
#include <vector>

namespace grext {

/// The t-th cross-effect cr_t(F)(Z,...,Z), realized as a direct summand of
/// F(Z^{*t}): the intersection of the kernels of the t generator-killing
/// retractions. `incl` has the basis as columns; `proj` is the retraction
/// along the canonical idempotent, so proj * incl = identity.
struct CrossEffectModule {
	ExprPtr functor;
	int t = 0;
	IntMat incl; // dim F(Z^{*t}) x rank
	IntMat proj; // rank x dim F(Z^{*t})

	long rank() const { return incl.cols(); }
};

/// Computed via integer kernel intersection; results are cached per
/// (functor, t). Thread-safe.
std::shared_ptr<const CrossEffectModule> cross_effect(const ExprPtr &f, int t);

/// Independent route to the cross-effect ranks: binomial inversion of the
/// dimension sequence dim F(Z^{*k}) = sum_t C(k,t) c_t, i.e. the t-th finite
/// difference of k -> dim F(Z^{*k}) at 0.
long cross_effect_rank_by_dims(const ExprPtr &f, int t);

/// Action matrices of the transpositions (p, p+1), p = 1..d-1, on
/// cr_d(F)(Z,...,Z).
std::vector<IntMat> transposition_actions(const ExprPtr &f, int d);

/// Action matrix of an arbitrary permutation sigma of {1..d} (left action:
/// the basis vector labeled by a tuple w maps to sigma∘w).
IntMat permutation_action(const ExprPtr &f, int d, const std::vector<int> &sigma);

} // namespace grext
