#include "grext/hochschild.hpp"

#include "grext/normal_form.hpp"
#include "grext/tensor_algebra.hpp"

#include <map>
#include <stdexcept>

namespace grext {

namespace {

// Basis of the weight-w part of T-bar^{⊗slots} ⊗ T^{>=r}: tuples of
// `slots` nonempty monomials followed by one monomial of degree >= r.
struct TupleBasis {
	std::vector<std::vector<Monomial>> tuples;
	std::map<std::vector<Monomial>, long> index;
};

TupleBasis tuple_basis(int alphabet, int slots, int r, int w)
{
	TupleBasis b;
	std::vector<Monomial> cur(static_cast<std::size_t>(slots) + 1);
	auto rec = [&](auto &&self, int slot, int rest) -> void {
		if (slot == slots) {
			if (rest < r)
				return;
			for (Monomial &m : monomials_of_degree(alphabet, rest)) {
				cur[static_cast<std::size_t>(slot)] = std::move(m);
				b.tuples.push_back(cur);
			}
			return;
		}
		for (int d = 1; d <= rest - r - (slots - slot - 1); ++d)
			for (Monomial &m : monomials_of_degree(alphabet, d)) {
				cur[static_cast<std::size_t>(slot)] = std::move(m);
				self(self, slot + 1, rest - d);
			}
	};
	rec(rec, 0, w);
	for (long i = 0; i < static_cast<long>(b.tuples.size()); ++i)
		b.index[b.tuples[i]] = i;
	return b;
}

// Differential T-bar^{⊗(s+1)}⊗T^{>=r} -> T-bar^{⊗s}⊗T^{>=r}:
// alternating sum of adjacent multiplications (concatenations).
IntMat hochschild_diff(const TupleBasis &src, const TupleBasis &tgt)
{
	IntMat d(static_cast<long>(tgt.tuples.size()),
	         static_cast<long>(src.tuples.size()));
	for (long c = 0; c < static_cast<long>(src.tuples.size()); ++c) {
		const auto &t = src.tuples[static_cast<std::size_t>(c)];
		for (std::size_t l = 0; l + 1 < t.size(); ++l) {
			std::vector<Monomial> merged;
			merged.reserve(t.size() - 1);
			for (std::size_t p = 0; p < t.size(); ++p) {
				if (p == l) {
					Monomial m = t[p];
					m.insert(m.end(), t[p + 1].begin(), t[p + 1].end());
					merged.push_back(std::move(m));
					++p;
				} else
					merged.push_back(t[p]);
			}
			auto it = tgt.index.find(merged);
			if (it == tgt.index.end())
				throw std::logic_error("hochschild_diff: merged tuple missing");
			d(it->second, c) += (l % 2 == 0) ? 1 : -1;
		}
	}
	return d;
}

} // namespace

HochschildReport graded_hochschild(int alphabet, int r, int w)
{
	if (alphabet < 0 || r < 0 || w < 0)
		throw std::invalid_argument("graded_hochschild: negative parameters");
	HochschildReport rep;
	long pw = 1;
	for (int i = 0; i < w; ++i)
		pw *= alphabet;
	rep.expected_h0_rank = (w >= r + 1) ? pw : 0;

	// chain degrees 0..3: s+1 bar slots at degree s
	std::vector<TupleBasis> basis;
	for (int s = 0; s <= 3; ++s)
		basis.push_back(tuple_basis(alphabet, s + 1, r, w));
	for (const auto &b : basis)
		rep.dims.push_back(static_cast<long>(b.tuples.size()));

	std::vector<IntMat> d; // d[s]: degree s+1 -> degree s
	for (int s = 0; s < 3; ++s)
		d.push_back(hochschild_diff(basis[static_cast<std::size_t>(s) + 1],
		                            basis[static_cast<std::size_t>(s)]));
	for (int s = 0; s + 1 < 3; ++s)
		if (!(d[static_cast<std::size_t>(s)] * d[static_cast<std::size_t>(s) + 1])
		         .is_zero())
			throw std::logic_error("graded_hochschild: d∘d != 0");

	// H_s = ker(d_{s-1->}) ... chain orientation: out of degree s is d[s-1],
	// into degree s is d[s].
	rep.h0 = homology_step(IntMat(0, rep.dims[0]), d[0]);
	rep.h1 = homology_step(d[0], d[1]);
	rep.h2 = homology_step(d[1], d[2]);

	// multiplication into the weight-w part of T^{>=r}
	TupleBasis aug = tuple_basis(alphabet, 0, r, w);
	rep.mult_image_rank = rank(hochschild_diff(basis[0], aug));
	return rep;
}

} // namespace grext
