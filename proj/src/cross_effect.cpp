#include "grext/cross_effect.hpp"

#include "grext/normal_form.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace grext {

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::string, int>, std::shared_ptr<const CrossEffectModule>> cache;

} // namespace

std::shared_ptr<const CrossEffectModule> cross_effect(const ExprPtr &f, int t)
{
	if (t < 0)
		throw std::invalid_argument("cross_effect: need t >= 0");
	const std::pair<std::string, int> key{expr_key(f), t};
	{
		std::lock_guard lock(cache_mutex);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}

	const long dim = functor_dim(f, t);
	auto mod = std::make_shared<CrossEffectModule>();
	mod->functor = f;
	mod->t = t;
	if (t == 0) {
		// cr_0(F) is the constant part F(0); at rank 0 the whole value.
		mod->incl = IntMat::identity(dim);
		mod->proj = IntMat::identity(dim);
	} else {
		std::vector<IntMat> retr;
		for (int i = 1; i <= t; ++i)
			retr.push_back(induced(f, kill_generator(t, i)));
		IntMat stacked(0, dim);
		for (const IntMat &p : retr)
			stacked = stacked.rows() == 0 ? p : vstack(stacked, p);
		mod->incl = kernel_basis(stacked);
		// canonical idempotent onto the cross-effect summand
		IntMat e = IntMat::identity(dim);
		for (const IntMat &p : retr)
			e = e * (IntMat::identity(dim) - p);
		mod->proj = solve_exact(mod->incl, e);
		// contract checks: summand structure
		if (!(mod->proj * mod->incl == IntMat::identity(mod->rank())))
			throw std::logic_error("cross_effect: projection is not a retraction");
		if (!(e * mod->incl == mod->incl))
			throw std::logic_error("cross_effect: idempotent does not fix the summand");
	}

	std::lock_guard lock(cache_mutex);
	auto [it, inserted] = cache.emplace(key, std::move(mod));
	return it->second;
}

long cross_effect_rank_by_dims(const ExprPtr &f, int t)
{
	// t-th finite difference at 0 of k -> dim F(Z^{*k})
	Int acc = 0;
	Int binom = 1;
	for (int j = 0; j <= t; ++j) {
		Int term = binom * functor_dim(f, j);
		if ((t - j) % 2 == 0)
			acc += term;
		else
			acc -= term;
		binom = binom * (t - j) / (j + 1);
	}
	return to_long(acc);
}

std::vector<IntMat> transposition_actions(const ExprPtr &f, int d)
{
	auto mod = cross_effect(f, d);
	std::vector<IntMat> out;
	for (int p = 1; p < d; ++p)
		out.push_back(mod->proj * induced(f, swap_generators(d, p)) * mod->incl);
	return out;
}

IntMat permutation_action(const ExprPtr &f, int d, const std::vector<int> &sigma)
{
	auto mod = cross_effect(f, d);
	return mod->proj * induced(f, permute_generators(d, sigma)) * mod->incl;
}

} // namespace grext
