#include "grext/group_ring.hpp"

#include "grext/errors.hpp"
#include "grext/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace grext {

long element_length(const GroupElement &g)
{
	long n = 0;
	for (const Word &w : g)
		n += w.length();
	return n;
}

namespace {

// Enumerate all tuples of monomials with prescribed factor alphabets and
// total degree exactly d, in lexicographic order of (degree split, content).
void tuples_of_degree(const std::vector<int> &factors, int d,
                      std::vector<TruncGroupRing::BasisTuple> &out)
{
	const int s = static_cast<int>(factors.size());
	auto emit = [&](const std::vector<int> &parts) {
		std::vector<std::vector<Monomial>> per_factor(s);
		for (int f = 0; f < s; ++f)
			per_factor[f] = monomials_of_degree(factors[f], parts[f]);
		std::vector<std::size_t> idx(s, 0);
		for (;;) {
			TruncGroupRing::BasisTuple t(s);
			bool empty = false;
			for (int f = 0; f < s; ++f) {
				if (per_factor[f].empty()) {
					empty = true;
					break;
				}
				t[f] = per_factor[f][idx[f]];
			}
			if (empty)
				break;
			out.push_back(std::move(t));
			int f = s - 1;
			while (f >= 0 && ++idx[f] == per_factor[f].size())
				idx[f--] = 0;
			if (f < 0)
				break;
		}
	};
	// compositions in lexicographic order on (parts[0], parts[1], ...)
	std::vector<int> parts(s, 0);
	auto rec = [&](auto &&self, int f, int rest) -> void {
		if (f == s - 1) {
			parts[f] = rest;
			emit(parts);
			return;
		}
		for (int k = 0; k <= rest; ++k) {
			parts[f] = k;
			self(self, f + 1, rest - k);
		}
	};
	if (s == 0) {
		if (d == 0)
			out.push_back({});
		return;
	}
	rec(rec, 0, d);
}

} // namespace

TruncGroupRing::TruncGroupRing(std::vector<int> factors, int cutoff)
    : factors_(std::move(factors)), cutoff_(cutoff)
{
	if (cutoff_ < 0)
		throw std::invalid_argument("TruncGroupRing: cutoff must be >= 0");
	for (int n : factors_)
		if (n < 0)
			throw std::invalid_argument("TruncGroupRing: negative factor rank");
	degree_offset_.assign(cutoff_ + 2, 0);
	for (int d = 0; d <= cutoff_; ++d) {
		degree_offset_[d] = static_cast<long>(basis_.size());
		tuples_of_degree(factors_, d, basis_);
	}
	degree_offset_[cutoff_ + 1] = static_cast<long>(basis_.size());
	for (long i = 0; i < dim(); ++i)
		index_[basis_[i]] = i;
}

long TruncGroupRing::index_of(const BasisTuple &t) const
{
	auto it = index_.find(t);
	return it == index_.end() ? -1 : it->second;
}

int TruncGroupRing::total_degree(const BasisTuple &t)
{
	int d = 0;
	for (const Monomial &m : t)
		d += static_cast<int>(m.size());
	return d;
}

long TruncGroupRing::graded_rank(int r) const
{
	if (r < 0 || r > cutoff_)
		throw std::out_of_range("graded_rank: r exceeds cutoff");
	return degree_offset_[r + 1] - degree_offset_[r];
}

long TruncGroupRing::degree_offset(int r) const
{
	if (r < 0)
		return 0;
	if (r > cutoff_ + 1)
		return dim();
	return degree_offset_[r];
}

long graded_rank_formula(const std::vector<int> &factors, int r)
{
	// convolution of the per-factor counts n^k
	std::vector<long> dp(r + 1, 0);
	dp[0] = 1;
	for (int n : factors) {
		std::vector<long> next(r + 1, 0);
		for (int a = 0; a <= r; ++a) {
			if (dp[a] == 0)
				continue;
			long p = 1;
			for (int b = 0; a + b <= r; ++b) {
				next[a + b] += dp[a] * p;
				p *= n;
			}
		}
		dp = std::move(next);
	}
	return dp[r];
}

Int RingElement::constant_term() const { return coeff(0); }

int RingElement::min_degree() const
{
	int d = ring->cutoff() + 1;
	for (const auto &[i, c] : coeffs)
		d = std::min(d, TruncGroupRing::total_degree(ring->basis_tuple(i)));
	return d;
}

std::vector<Int> RingElement::dense() const
{
	std::vector<Int> v(ring->dim());
	for (const auto &[i, c] : coeffs)
		v[i] = c;
	return v;
}

RingElement re_zero(const TruncGroupRing &ring) { return RingElement{&ring, {}}; }

RingElement re_one(const TruncGroupRing &ring)
{
	RingElement e{&ring, {}};
	e.coeffs[0] = 1; // the all-units tuple has degree 0 and index 0
	return e;
}

static void re_add_term(RingElement &e, long idx, const Int &c)
{
	if (c == 0 || idx < 0)
		return;
	Int &slot = e.coeffs[idx];
	slot += c;
	if (slot == 0)
		e.coeffs.erase(idx);
}

RingElement operator+(const RingElement &a, const RingElement &b)
{
	RingElement r = a;
	for (const auto &[i, c] : b.coeffs)
		re_add_term(r, i, c);
	return r;
}

RingElement operator-(const RingElement &a, const RingElement &b)
{
	RingElement r = a;
	for (const auto &[i, c] : b.coeffs)
		re_add_term(r, i, -c);
	return r;
}

RingElement operator*(const RingElement &a, const RingElement &b)
{
	if (a.ring != b.ring)
		throw std::invalid_argument("RingElement: parent ring mismatch");
	const TruncGroupRing &ring = *a.ring;
	RingElement r = re_zero(ring);
	const int s = static_cast<int>(ring.factors().size());
	for (const auto &[ia, ca] : a.coeffs) {
		const auto &ta = ring.basis_tuple(ia);
		const int da = TruncGroupRing::total_degree(ta);
		for (const auto &[ib, cb] : b.coeffs) {
			const auto &tb = ring.basis_tuple(ib);
			if (da + TruncGroupRing::total_degree(tb) > ring.cutoff())
				continue;
			TruncGroupRing::BasisTuple t(s);
			for (int f = 0; f < s; ++f) {
				t[f] = ta[f];
				t[f].insert(t[f].end(), tb[f].begin(), tb[f].end());
			}
			re_add_term(r, ring.index_of(t), ca * cb);
		}
	}
	return r;
}

RingElement operator*(const Int &c, const RingElement &a)
{
	RingElement r{a.ring, {}};
	if (c == 0)
		return r;
	for (const auto &[i, v] : a.coeffs)
		r.coeffs[i] = c * v;
	return r;
}

RingElement embed(const TruncGroupRing &ring, const GroupElement &g)
{
	const int s = static_cast<int>(ring.factors().size());
	if (static_cast<int>(g.size()) != s)
		throw std::invalid_argument("embed: element does not match ring factors");
	std::vector<TruncTensor> exp(s);
	for (int f = 0; f < s; ++f) {
		if (g[f].rank != ring.factors()[f])
			throw std::invalid_argument("embed: word rank does not match factor");
		exp[f] = magnus_expand(g[f], ring.cutoff());
	}
	RingElement r = re_zero(ring);
	// distribute the factorwise expansions over basis tuples
	TruncGroupRing::BasisTuple t(s);
	auto rec = [&](auto &&self, int f, int deg, const Int &c) -> void {
		if (f == s) {
			re_add_term(r, ring.index_of(t), c);
			return;
		}
		for (const auto &[m, cm] : exp[f].coeffs) {
			if (deg + static_cast<int>(m.size()) > ring.cutoff())
				continue;
			t[f] = m;
			self(self, f + 1, deg + static_cast<int>(m.size()), c * cm);
		}
		t[f].clear();
	};
	rec(rec, 0, 0, Int(1));
	return r;
}

RingElement ring_element(const TruncGroupRing &ring,
                         const std::vector<std::pair<Int, GroupElement>> &comb)
{
	RingElement r = re_zero(ring);
	for (const auto &[c, g] : comb) {
		RingElement e = embed(ring, g);
		for (const auto &[i, v] : e.coeffs)
			re_add_term(r, i, c * v);
	}
	return r;
}

std::vector<GroupElement> ball(const std::vector<int> &factors, long radius)
{
	const int s = static_cast<int>(factors.size());
	GroupElement id;
	for (int f = 0; f < s; ++f)
		id.push_back(identity_word(factors[f]));
	std::set<GroupElement> seen{id};
	std::deque<GroupElement> queue{id};
	while (!queue.empty()) {
		GroupElement g = queue.front();
		queue.pop_front();
		if (element_length(g) >= radius)
			continue;
		for (int f = 0; f < s; ++f)
			for (int i = 1; i <= factors[f]; ++i)
				for (int sign : {1, -1}) {
					GroupElement h = g;
					h[f] = concat(h[f], generator_word(factors[f], sign * i));
					if (element_length(h) <= radius && seen.insert(h).second)
						queue.push_back(h);
				}
	}
	std::vector<GroupElement> out(seen.begin(), seen.end());
	std::sort(out.begin(), out.end(), [](const GroupElement &a, const GroupElement &b) {
		long la = element_length(a), lb = element_length(b);
		if (la != lb)
			return la < lb;
		return a < b;
	});
	return out;
}

namespace {

struct BallQuotient {
	long rank = 0;
	std::vector<Int> torsion;
	long relations = 0;
	long size = 0;
};

BallQuotient ball_quotient(const std::vector<int> &factors, int N, long L,
                           long max_ball)
{
	std::vector<GroupElement> elems = ball(factors, L);
	if (static_cast<long>(elems.size()) > max_ball)
		throw resource_limit_error("ball_presentation: ball size exceeds limit");
	std::map<GroupElement, long> index;
	for (long i = 0; i < static_cast<long>(elems.size()); ++i)
		index[elems[i]] = i;

	// positive generators of the product
	std::vector<std::pair<int, int>> gens; // (factor, index)
	for (int f = 0; f < static_cast<int>(factors.size()); ++f)
		for (int i = 1; i <= factors[f]; ++i)
			gens.emplace_back(f, i);

	LatticeBuilder lattice(static_cast<long>(elems.size()));
	long relations = 0;
	const int k = N + 1;
	std::vector<int> seq(k, 0);
	for (const GroupElement &g : elems) {
		// iterate over all generator sequences of length N+1
		std::fill(seq.begin(), seq.end(), 0);
		for (;;) {
			// subset products: expand g * prod_{p in S} x_{seq[p]}
			// over all subsets S, tracking reduced elements
			std::vector<GroupElement> prod(static_cast<std::size_t>(1) << k);
			std::vector<long> idx(prod.size(), -1);
			prod[0] = g;
			bool inside = true;
			auto it0 = index.find(g);
			if (it0 == index.end())
				inside = false;
			else
				idx[0] = it0->second;
			for (std::size_t mask = 1; mask < prod.size() && inside; ++mask) {
				const int top = 63 - __builtin_clzll(mask);
				const auto [f, i] = gens[static_cast<std::size_t>(seq[top])];
				GroupElement h = prod[mask ^ (1ull << top)];
				h[f] = concat(h[f], generator_word(factors[f], i));
				auto it = index.find(h);
				if (it == index.end()) {
					inside = false;
					break;
				}
				idx[mask] = it->second;
				prod[mask] = std::move(h);
			}
			if (inside) {
				std::vector<Int> row(elems.size());
				for (std::size_t mask = 0; mask < prod.size(); ++mask) {
					const int bits = __builtin_popcountll(mask);
					row[idx[mask]] += ((k - bits) % 2 == 0) ? 1 : -1;
				}
				lattice.insert(std::move(row));
				++relations;
			}
			int p = k - 1;
			while (p >= 0 && seq[p] == static_cast<int>(gens.size()) - 1)
				seq[p--] = 0;
			if (p < 0)
				break;
			++seq[p];
		}
	}
	BallQuotient q;
	q.size = static_cast<long>(elems.size());
	q.rank = q.size - lattice.rank();
	q.torsion = lattice.quotient_torsion();
	q.relations = relations;
	return q;
}

} // namespace

BallReport ball_presentation(const std::vector<int> &factors, int N, long L,
                             long max_ball)
{
	if (L < N + 1)
		throw std::invalid_argument("ball_presentation: need L >= N+1");
	BallQuotient prev = ball_quotient(factors, N, L - 1, max_ball);
	BallQuotient cur = ball_quotient(factors, N, L, max_ball);
	BallReport r;
	r.ball_size = cur.size;
	r.rank = cur.rank;
	r.rank_prev = prev.rank;
	r.torsion = cur.torsion;
	r.stable = cur.rank == prev.rank;
	r.relations = cur.relations;
	return r;
}

GradedTorReport graded_tor_check(int alphabet, int r, int w)
{
	if (r < 0 || w < 0)
		throw std::invalid_argument("graded_tor_check: negative parameters");
	GradedTorReport rep;
	const long pw = [&] {
		long p = 1;
		for (int i = 0; i < w; ++i)
			p *= alphabet;
		return p;
	}();
	rep.target_rank = (w >= r) ? pw : 0;
	rep.expected_image_rank = (w >= r + 1) ? pw : 0;
	if (w == 0 || w - 1 < r) {
		// empty domain
		rep.kernel_rank = 0;
		rep.image_rank = 0;
		return rep;
	}
	std::vector<Monomial> dom = monomials_of_degree(alphabet, w - 1);
	std::vector<Monomial> tgt = monomials_of_degree(alphabet, w);
	std::map<Monomial, long> tgt_index;
	for (long i = 0; i < static_cast<long>(tgt.size()); ++i)
		tgt_index[tgt[i]] = i;
	// matrix of (a_1,...,a_n) -> sum a_i X_i
	IntMat m(static_cast<long>(tgt.size()),
	         static_cast<long>(dom.size()) * alphabet);
	long col = 0;
	for (int i = 1; i <= alphabet; ++i)
		for (const Monomial &a : dom) {
			Monomial t = a;
			t.push_back(i);
			m(tgt_index[t], col++) = 1;
		}
	const long rk = rank(m);
	rep.image_rank = rk;
	rep.kernel_rank = m.cols() - rk;
	return rep;
}

} // namespace grext
