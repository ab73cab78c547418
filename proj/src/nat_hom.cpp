#include "grext/nat_hom.hpp"

#include "grext/normal_form.hpp"

#include <stdexcept>

namespace grext {

namespace {

std::vector<GrMorphism> generating_morphisms(int K)
{
	std::vector<GrMorphism> gens;
	for (int n = 1; n <= K; ++n)
		for (int i = 0; i <= n; ++i)
			gens.push_back(bar_coface(n, i));
	for (int d = 2; d <= K; ++d)
		gens.push_back(fold(d));
	for (int n = 2; n <= K; ++n)
		for (int p = 1; p < n; ++p)
			gens.push_back(swap_generators(n, p));
	for (int n = 1; n <= K; ++n)
		gens.push_back(invert_first(n));
	return gens;
}

struct TruncatedHom {
	long nullity = 0;
	long constraints = 0;
	long unknowns = 0;
};

TruncatedHom truncated_hom_rank(const ExprPtr &f, const ExprPtr &g, int K)
{
	std::vector<long> dim_f(K + 1), dim_g(K + 1), offset(K + 2, 0);
	for (int k = 0; k <= K; ++k) {
		dim_f[k] = functor_dim(f, k);
		dim_g[k] = functor_dim(g, k);
		offset[k + 1] = offset[k] + dim_f[k] * dim_g[k];
	}
	const long unknowns = offset[K + 1];
	// variable id of eta_k[r][c]: offset[k] + r * dim_f[k] + c
	SparseEliminator elim(unknowns);
	long constraints = 0;
	for (const GrMorphism &phi : generating_morphisms(K)) {
		const int m = phi.src_rank, k = phi.dst_rank;
		// G(phi) * eta_m = eta_k * F(phi)
		IntMat a = induced(g, phi); // dim_g[k] x dim_g[m]
		IntMat b = induced(f, phi); // dim_f[k] x dim_f[m]
		std::vector<SparseVec> a_rows(a.rows());
		for (long r = 0; r < a.rows(); ++r)
			a_rows[r] = sparse_row(a, r);
		for (long r = 0; r < dim_g[k]; ++r)
			for (long c = 0; c < dim_f[m]; ++c) {
				SparseVec row;
				for (const auto &[j, v] : a_rows[r])
					row.emplace_back(offset[m] + j * dim_f[m] + c, v);
				for (long j = 0; j < dim_f[k]; ++j)
					if (b(j, c) != 0)
						row.emplace_back(offset[k] + r * dim_f[k] + j, -b(j, c));
				std::sort(row.begin(), row.end(),
				          [](const auto &x, const auto &y) { return x.first < y.first; });
				// merge duplicate columns (possible when m == k)
				SparseVec merged;
				for (auto &[col, v] : row) {
					if (!merged.empty() && merged.back().first == col)
						merged.back().second += v;
					else
						merged.emplace_back(col, v);
				}
				std::erase_if(merged, [](const auto &p) { return p.second == 0; });
				if (!merged.empty()) {
					elim.insert(std::move(merged));
					++constraints;
				}
			}
	}
	return {unknowns - elim.rank(), constraints, unknowns};
}

} // namespace

NatHomResult nat_hom_oracle(const ExprPtr &f, const ExprPtr &g, int K,
                            bool check_stability)
{
	const int mindeg = std::max(degree(f), degree(g)) + 1;
	if (K < mindeg)
		throw std::invalid_argument("nat_hom_oracle: rank bound below max degree + 1");
	TruncatedHom h = truncated_hom_rank(f, g, K);
	NatHomResult r;
	r.group.free_rank = h.nullity;
	r.constraints = h.constraints;
	r.unknowns = h.unknowns;
	if (check_stability) {
		TruncatedHom h2 = truncated_hom_rank(f, g, K + 1);
		r.stable = h2.nullity == h.nullity;
	}
	return r;
}

FinAbGroup hom_passi(int n, const ExprPtr &f)
{
	if (n < 0)
		throw std::invalid_argument("hom_passi: need n >= 0");
	auto cr1 = cross_effect(f, 1);
	if (n == 0)
		// q_0(P-bar) = 0
		return FinAbGroup{0, {}};
	auto crn = cross_effect(f, n + 1);
	IntMat m = crn->proj * induced(f, fold(n + 1)) * cr1->incl;
	FinAbGroup h;
	h.free_rank = cr1->rank() - rank(m);
	return h;
}

} // namespace grext
