#include "grext/kappa.hpp"

#include "grext/errors.hpp"
#include "grext/normal_form.hpp"

#include <stdexcept>

namespace grext {

namespace {

long span_rank(const TruncGroupRing &ring, int d, long l, long max_ball)
{
	const std::vector<int> &factors = ring.factors();
	std::vector<GroupElement> elems = ball(factors, l);
	if (static_cast<long>(elems.size()) > max_ball)
		throw resource_limit_error("kappa_image_rank: ball size exceeds limit");

	// lattice V spanned by [g]-1 over the ball
	LatticeBuilder v(ring.dim());
	RingElement one = re_one(ring);
	for (const GroupElement &g : elems) {
		if (element_length(g) == 0)
			continue;
		v.insert((embed(ring, g) - one).dense());
	}
	auto to_elements = [&](const LatticeBuilder &lat) {
		std::vector<RingElement> out;
		IntMat b = lat.basis_matrix();
		for (long i = 0; i < b.rows(); ++i) {
			RingElement e = re_zero(ring);
			for (long j = 0; j < b.cols(); ++j)
				if (b(i, j) != 0)
					e.coeffs[j] = b(i, j);
			out.push_back(std::move(e));
		}
		return out;
	};
	std::vector<RingElement> v_basis = to_elements(v);
	std::vector<RingElement> w_basis = v_basis;
	for (int step = 0; step < d; ++step) {
		LatticeBuilder w(ring.dim());
		for (const RingElement &a : w_basis)
			for (const RingElement &b : v_basis) {
				RingElement p = a * b;
				if (!p.is_zero())
					w.insert(p.dense());
			}
		w_basis = to_elements(w);
	}
	return static_cast<long>(w_basis.size());
}

} // namespace

KappaReport kappa_image_rank(int d, int N, long l, int n, int m, long max_ball)
{
	if (N < d + 1)
		throw std::invalid_argument("kappa_image_rank: need N >= d+1");
	if (l < 1)
		throw std::invalid_argument("kappa_image_rank: need l >= 1");
	TruncGroupRing ring(std::vector<int>(n, m), N);
	KappaReport r;
	for (int deg = d + 1; deg <= N; ++deg)
		r.target_rank += ring.graded_rank(deg);
	r.rank_prev = l > 1 ? span_rank(ring, d, l - 1, max_ball) : 0;
	r.rank = span_rank(ring, d, l, max_ball);
	r.stable = r.rank == r.rank_prev;
	return r;
}

bool kappa_identity_holds(const TruncGroupRing &ring,
                          const std::vector<GroupElement> &tuple)
{
	const int d = static_cast<int>(tuple.size()) - 1;
	RingElement one = re_one(ring);
	// left side: inclusion-exclusion over subsets, ordered products
	RingElement lhs = re_zero(ring);
	const std::size_t subsets = static_cast<std::size_t>(1) << tuple.size();
	for (std::size_t mask = 0; mask < subsets; ++mask) {
		GroupElement prod;
		for (const Word &w : tuple[0])
			prod.push_back(identity_word(w.rank));
		for (std::size_t j = 0; j < tuple.size(); ++j)
			if (mask & (std::size_t(1) << j))
				for (std::size_t f = 0; f < prod.size(); ++f)
					prod[f] = concat(prod[f], tuple[j][f]);
		RingElement term = embed(ring, prod);
		if (__builtin_popcountll(mask) % 2 == 1)
			lhs = lhs - term;
		else
			lhs = lhs + term;
	}
	// right side: (-1)^{d+1} (g_0-1)...(g_d-1)
	RingElement rhs = one;
	for (const GroupElement &g : tuple)
		rhs = rhs * (embed(ring, g) - one);
	if ((d + 1) % 2 == 1)
		rhs = Int(-1) * rhs;
	return lhs == rhs;
}

} // namespace grext
