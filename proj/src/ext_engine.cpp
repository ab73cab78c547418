#include "grext/ext_engine.hpp"

#include "grext/errors.hpp"
#include "grext/normal_form.hpp"

#include <chrono>
#include <stdexcept>

namespace grext {

void CochainComplex::validate() const
{
	for (std::size_t i = 0; i + 1 < d.size(); ++i)
		if (!(d[i + 1] * d[i]).is_zero())
			throw std::logic_error("cochain complex: d∘d != 0 at degree " +
			                       std::to_string(i));
}

FinAbGroup CochainComplex::homology(int i) const
{
	if (i < 0 || i + 1 >= static_cast<int>(dims.size()))
		throw std::out_of_range("homology: degree outside constructed range");
	const IntMat &out = d[static_cast<std::size_t>(i)];
	IntMat in = i > 0 ? d[static_cast<std::size_t>(i) - 1] : IntMat(dims[0], 0);
	return homology_step(out, in);
}

long CochainComplex::betti(int i) const
{
	if (i < 0 || i + 1 >= static_cast<int>(dims.size()))
		throw std::out_of_range("betti: degree outside constructed range");
	const IntMat &out = d[static_cast<std::size_t>(i)];
	IntMat in = i > 0 ? d[static_cast<std::size_t>(i) - 1] : IntMat(dims[0], 0);
	return betti_step(out, in);
}

ExtSource parse_ext_source(const std::string &text)
{
	ExprPtr e = parse_functor(text);
	if (e->kind == FunctorExpr::Kind::Passi)
		return ExtSource{true, e->param};
	if (e->kind == FunctorExpr::Kind::Ab)
		return ExtSource{false, 1};
	if (e->kind == FunctorExpr::Kind::AbPow)
		return ExtSource{false, e->param};
	throw std::invalid_argument(
	    "ext source must be a tensor power of the abelianization (a, a^n) or passi(n)");
}

namespace {

/// Compositions of total into `parts` positive parts, lexicographic.
std::vector<std::vector<int>> positive_compositions(int total, int parts)
{
	std::vector<std::vector<int>> out;
	if (parts == 0) {
		if (total == 0)
			out.push_back({});
		return out;
	}
	std::vector<int> cur(parts, 1);
	auto rec = [&](auto &&self, int idx, int rest) -> void {
		if (idx == parts - 1) {
			cur[idx] = rest;
			out.push_back(cur);
			return;
		}
		for (int v = 1; v <= rest - (parts - idx - 1); ++v) {
			cur[idx] = v;
			self(self, idx + 1, rest - v);
		}
	};
	if (total >= parts)
		rec(rec, 0, total);
	return out;
}

/// Weak compositions of total into `parts` nonnegative parts, lexicographic.
std::vector<std::vector<int>> weak_compositions(int total, int parts)
{
	std::vector<std::vector<int>> out;
	if (parts == 0) {
		if (total == 0)
			out.push_back({});
		return out;
	}
	std::vector<int> cur(parts, 0);
	auto rec = [&](auto &&self, int idx, int rest) -> void {
		if (idx == parts - 1) {
			cur[idx] = rest;
			out.push_back(cur);
			return;
		}
		for (int v = 0; v <= rest; ++v) {
			cur[idx] = v;
			self(self, idx + 1, rest - v);
		}
	};
	rec(rec, 0, total);
	return out;
}

/// Coface acting on one tensor slot of a composition: the morphism
/// Z^{*s} -> Z^{*(s+1)} applying bar_coface(c[l]+1, j) to block l and
/// passing the other blocks through (with the shift after block l).
GrMorphism block_coface(const std::vector<int> &c, int l, int j)
{
	const int n = static_cast<int>(c.size());
	int s = 0;
	for (int v : c)
		s += v;
	GrMorphism local = bar_coface(c[l] + 1, j);
	GrMorphism phi{s, s + 1, {}};
	int off = 0;
	for (int m = 0; m < n; ++m) {
		for (int t = 1; t <= c[m]; ++t) {
			if (m < l)
				phi.images.push_back(generator_word(s + 1, off + t));
			else if (m > l)
				phi.images.push_back(generator_word(s + 1, off + t + 1));
			else {
				const Word &im = local.images[static_cast<std::size_t>(t) - 1];
				std::vector<int> letters;
				for (int x : im.letters)
					letters.push_back(x > 0 ? x + off : x - off);
				phi.images.push_back(reduce(s + 1, letters));
			}
		}
		off += c[m] + (m >= l ? 1 : 0);
	}
	return phi;
}

struct HomSide {
	const ExprPtr &f;
	BarMode mode;

	long module_dim(int rank) const
	{
		return mode == BarMode::unnormalized ? functor_dim(f, rank)
		                                     : cross_effect(f, rank)->rank();
	}

	/// Matrix of Hom(u_phi, F) between the Hom-modules of P-symbols of
	/// ranks phi.src_rank (columns) and phi.dst_rank (rows).
	IntMat map(const GrMorphism &phi) const
	{
		if (mode == BarMode::unnormalized)
			return induced(f, phi);
		auto src = cross_effect(f, phi.src_rank);
		auto dst = cross_effect(f, phi.dst_rank);
		return dst->proj * induced(f, phi) * src->incl;
	}
};

void add_block(IntMat &dest, long row0, long col0, const IntMat &block)
{
	for (long i = 0; i < block.rows(); ++i)
		for (long j = 0; j < block.cols(); ++j)
			if (block(i, j) != 0)
				dest(row0 + i, col0 + j) += block(i, j);
}

} // namespace

CochainComplex bar_cochain_complex(int n, const ExprPtr &f, int i_max,
                                   BarMode mode, const Config &cfg)
{
	if (n < 1 || i_max < 0)
		throw std::invalid_argument("bar_cochain_complex: need n >= 1, i_max >= 0");
	HomSide hom{f, mode};
	const int top = i_max + 1;
	CochainComplex cx;
	std::vector<std::vector<std::vector<int>>> comps(top + 1);
	for (int i = 0; i <= top; ++i) {
		comps[i] = positive_compositions(i + n, n);
		const long dim =
		    static_cast<long>(comps[i].size()) * hom.module_dim(i + n);
		check_module_dim(cfg, dim);
		cx.dims.push_back(dim);
	}
	for (int i = 0; i < top; ++i) {
		const long src_dim = hom.module_dim(i + n);
		const long tgt_dim = hom.module_dim(i + n + 1);
		check_matrix_size(cfg, cx.dims[i + 1], cx.dims[i]);
		IntMat d(cx.dims[i + 1], cx.dims[i]);
		for (std::size_t q = 0; q < comps[i].size(); ++q) {
			const std::vector<int> &c = comps[i][q];
			int left_degree = 0;
			for (int l = 0; l < n; ++l) {
				std::vector<int> ct = c;
				++ct[l];
				// locate the target composition
				long qt = -1;
				for (std::size_t r = 0; r < comps[i + 1].size(); ++r)
					if (comps[i + 1][r] == ct) {
						qt = static_cast<long>(r);
						break;
					}
				const int kunneth = left_degree % 2 == 0 ? 1 : -1;
				for (int j = 0; j <= c[l] + 1; ++j) {
					IntMat block = hom.map(block_coface(c, l, j));
					const int sign = (j % 2 == 0 ? 1 : -1) * kunneth;
					if (sign < 0)
						block = -block;
					add_block(d, qt * tgt_dim, static_cast<long>(q) * src_dim,
					          block);
				}
				left_degree += c[l] - 1;
			}
		}
		cx.d.push_back(std::move(d));
	}
	cx.validate();
	return cx;
}

ExtTable ext_ab_pow(int n, const ExprPtr &f, int i_max, BarMode mode,
                    const Config &cfg)
{
	auto t0 = std::chrono::steady_clock::now();
	CochainComplex cx = bar_cochain_complex(n, f, i_max, mode, cfg);
	ExtTable table;
	table.mode = mode;
	table.complex_dims = cx.dims;
	for (int i = 0; i <= i_max; ++i)
		table.groups.push_back(cx.homology(i));
	table.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                      std::chrono::steady_clock::now() - t0)
	                      .count();
	return table;
}

PassiResolution passi_resolution(int n, int length)
{
	if (n < 0 || length < 1)
		throw std::invalid_argument("passi_resolution: need n >= 0, length >= 1");
	PassiResolution res;
	res.n = n;
	res.length = length;
	res.terms.resize(static_cast<std::size_t>(length) + 1);
	res.diffs.resize(static_cast<std::size_t>(length) + 1);
	if (n == 0)
		return res; // q_0(P-bar) = 0: the trivial resolution
	res.terms[0].push_back(PassiTerm{1, {}});
	for (int j = 1; j <= length; ++j)
		for (const auto &lv : weak_compositions(j - 1, n))
			res.terms[static_cast<std::size_t>(j)].push_back(
			    PassiTerm{j + n, lv});
	// splice map S_1 -> S_0: the (n+1)-fold multiplication
	res.diffs[1].push_back(PassiDiffEntry{0, 0, 1, fold(n + 1)});
	for (int j = 2; j <= length; ++j) {
		const auto &src = res.terms[static_cast<std::size_t>(j)];
		const auto &tgt = res.terms[static_cast<std::size_t>(j) - 1];
		const int m = j + n; // tensor power of every degree-j term
		for (int qi = 0; qi < static_cast<int>(src.size()); ++qi) {
			const std::vector<int> &lv = src[static_cast<std::size_t>(qi)].label;
			int offset = 0; // slots before the current splice level
			for (int b = 0; b < n; ++b) {
				if (lv[static_cast<std::size_t>(b)] >= 1) {
					std::vector<int> lt = lv;
					--lt[static_cast<std::size_t>(b)];
					int ti = -1;
					for (int r = 0; r < static_cast<int>(tgt.size()); ++r)
						if (tgt[static_cast<std::size_t>(r)].label == lt) {
							ti = r;
							break;
						}
					const int prefix = offset % 2 == 0 ? 1 : -1;
					for (int l = 0; l <= lv[static_cast<std::size_t>(b)]; ++l) {
						const int sign = prefix * (l % 2 == 0 ? 1 : -1);
						res.diffs[static_cast<std::size_t>(j)].push_back(
						    PassiDiffEntry{qi, ti, sign,
						                   bar_coface(m, offset + l + 1)});
					}
				}
				offset += lv[static_cast<std::size_t>(b)] + 1;
			}
		}
	}
	return res;
}

CochainComplex passi_hom_complex(const PassiResolution &res, const ExprPtr &f,
                                 int i_max, const Config &cfg)
{
	if (i_max + 1 > res.length)
		throw std::invalid_argument(
		    "passi_hom_complex: resolution length " + std::to_string(res.length) +
		    " too small for Ext degree " + std::to_string(i_max) +
		    " (need length >= i_max + 1)");
	HomSide hom{f, BarMode::normalized};
	CochainComplex cx;
	std::vector<long> module_dim(static_cast<std::size_t>(i_max) + 2);
	for (int j = 0; j <= i_max + 1; ++j) {
		const auto &terms = res.terms[static_cast<std::size_t>(j)];
		long md = 0;
		if (!terms.empty())
			md = hom.module_dim(terms[0].tensor_power);
		module_dim[static_cast<std::size_t>(j)] = md;
		const long dim = static_cast<long>(terms.size()) * md;
		check_module_dim(cfg, dim);
		cx.dims.push_back(dim);
	}
	for (int j = 0; j <= i_max; ++j) {
		check_matrix_size(cfg, cx.dims[j + 1], cx.dims[j]);
		IntMat d(cx.dims[j + 1], cx.dims[j]);
		for (const PassiDiffEntry &e : res.diffs[static_cast<std::size_t>(j) + 1]) {
			IntMat block = hom.map(e.phi);
			if (e.sign < 0)
				block = -block;
			add_block(d, e.from * module_dim[static_cast<std::size_t>(j) + 1],
			          e.to * module_dim[static_cast<std::size_t>(j)], block);
		}
		cx.d.push_back(std::move(d));
	}
	cx.validate();
	return cx;
}

ExtTable ext_passi(int n, const ExprPtr &f, int i_max, const Config &cfg,
                   int length)
{
	auto t0 = std::chrono::steady_clock::now();
	if (length < 0)
		length = i_max + 1;
	PassiResolution res = passi_resolution(n, length);
	ExtTable table;
	table.mode = BarMode::normalized;
	if (n == 0) {
		// q_0(P-bar) = 0
		table.groups.assign(static_cast<std::size_t>(i_max) + 1, FinAbGroup{});
		return table;
	}
	CochainComplex cx = passi_hom_complex(res, f, i_max, cfg);
	table.complex_dims = cx.dims;
	for (int i = 0; i <= i_max; ++i)
		table.groups.push_back(cx.homology(i));
	table.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                      std::chrono::steady_clock::now() - t0)
	                      .count();
	return table;
}

std::vector<long> rational_ext(const ExtSource &src, const ExprPtr &f,
                               int i_max, const Config &cfg)
{
	CochainComplex cx =
	    src.passi
	        ? passi_hom_complex(passi_resolution(src.n, i_max + 1), f, i_max, cfg)
	        : bar_cochain_complex(src.n, f, i_max, BarMode::normalized, cfg);
	std::vector<long> betti;
	if (src.passi && src.n == 0) {
		betti.assign(static_cast<std::size_t>(i_max) + 1, 0);
		return betti;
	}
	for (int i = 0; i <= i_max; ++i)
		betti.push_back(cx.betti(i));
	return betti;
}

ExtTable ext(const ExtSource &src, const ExprPtr &f, int i_max, BarMode mode,
             const Config &cfg)
{
	if (src.passi)
		return ext_passi(src.n, f, i_max, cfg);
	return ext_ab_pow(src.n, f, i_max, mode, cfg);
}

} // namespace grext
