#include "grext/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace grext {

namespace {

// Replace rows (p, q) by unimodular combinations making m(p, col) the gcd of
// the two leading entries and m(q, col) zero. Applied to u in lockstep.
void row_gcd_step(IntMat &m, IntMat &u, long p, long q, long col)
{
	const Int a = m(p, col), b = m(q, col);
	if (b == 0)
		return;
	if (a == 0) {
		for (long j = 0; j < m.cols(); ++j)
			std::swap(m(p, j), m(q, j));
		for (long j = 0; j < u.cols(); ++j)
			std::swap(u(p, j), u(q, j));
		return;
	}
	if (divides(a, b)) {
		const Int f = divexact(b, a);
		for (long j = 0; j < m.cols(); ++j)
			m(q, j) -= f * m(p, j);
		for (long j = 0; j < u.cols(); ++j)
			u(q, j) -= f * u(p, j);
		return;
	}
	Int s, t;
	const Int g = gcdext(a, b, s, t);
	const Int af = divexact(a, g), bf = divexact(b, g);
	// [[s, t], [-bf, af]] has determinant s*af + t*bf = 1.
	for (long j = 0; j < m.cols(); ++j) {
		Int mp = m(p, j), mq = m(q, j);
		m(p, j) = s * mp + t * mq;
		m(q, j) = af * mq - bf * mp;
	}
	for (long j = 0; j < u.cols(); ++j) {
		Int up = u(p, j), uq = u(q, j);
		u(p, j) = s * up + t * uq;
		u(q, j) = af * uq - bf * up;
	}
}

} // namespace

HnfResult hnf(const IntMat &m0)
{
	IntMat m = m0;
	IntMat u = IntMat::identity(m.rows());
	long piv_row = 0;
	std::vector<std::pair<long, long>> pivots; // (row, col)
	for (long col = 0; col < m.cols() && piv_row < m.rows(); ++col) {
		long nz = -1;
		for (long i = piv_row; i < m.rows(); ++i)
			if (m(i, col) != 0) {
				nz = i;
				break;
			}
		if (nz < 0)
			continue;
		if (nz != piv_row)
			row_gcd_step(m, u, piv_row, nz, col); // swaps (pivot row is zero)
		for (long i = piv_row + 1; i < m.rows(); ++i)
			if (m(i, col) != 0)
				row_gcd_step(m, u, piv_row, i, col);
		if (m(piv_row, col) < 0) {
			for (long j = 0; j < m.cols(); ++j)
				m(piv_row, j) = -m(piv_row, j);
			for (long j = 0; j < u.cols(); ++j)
				u(piv_row, j) = -u(piv_row, j);
		}
		pivots.emplace_back(piv_row, col);
		++piv_row;
	}
	// Reduce entries above each pivot into [0, pivot).
	for (auto [r, c] : pivots) {
		const Int &p = m(r, c);
		for (long i = 0; i < r; ++i) {
			if (m(i, c) == 0)
				continue;
			Int f;
			mpz_fdiv_q(f.get_mpz_t(), m(i, c).get_mpz_t(), p.get_mpz_t());
			if (f == 0)
				continue;
			for (long j = 0; j < m.cols(); ++j)
				m(i, j) -= f * m(r, j);
			for (long j = 0; j < u.cols(); ++j)
				u(i, j) -= f * u(r, j);
		}
	}
	return {std::move(m), std::move(u)};
}

long rank(const IntMat &m)
{
	SparseEliminator e(m.cols());
	for (long i = 0; i < m.rows(); ++i) {
		SparseVec v = sparse_row(m, i);
		if (!v.empty())
			e.insert(std::move(v));
	}
	return e.rank();
}

IntMat kernel_basis(const IntMat &m)
{
	// Row-reduce the transpose with a transform; rows of u matching zero
	// rows of h are a basis of the kernel lattice.
	HnfResult r = hnf(m.transpose());
	std::vector<long> zero_rows;
	for (long i = 0; i < r.h.rows(); ++i) {
		bool z = true;
		for (long j = 0; j < r.h.cols() && z; ++j)
			z = r.h(i, j) == 0;
		if (z)
			zero_rows.push_back(i);
	}
	IntMat gen(static_cast<long>(zero_rows.size()), r.u.cols());
	for (long i = 0; i < gen.rows(); ++i)
		for (long j = 0; j < gen.cols(); ++j)
			gen(i, j) = r.u(zero_rows[i], j);
	// Canonicalize the basis.
	IntMat can = hnf(gen).h;
	IntMat out(m.cols(), gen.rows());
	for (long i = 0; i < gen.rows(); ++i)
		for (long j = 0; j < m.cols(); ++j)
			out(j, i) = can(i, j);
	return out;
}

IntMat solve_exact(const IntMat &a, const IntMat &b)
{
	if (a.rows() != b.rows())
		throw std::runtime_error("solve_exact: shape mismatch");
	HnfResult r = hnf(a);
	// Locate pivot of each echelon row; full column rank required.
	std::vector<std::pair<long, long>> pivots;
	for (long i = 0; i < r.h.rows(); ++i)
		for (long j = 0; j < r.h.cols(); ++j)
			if (r.h(i, j) != 0) {
				pivots.emplace_back(i, j);
				break;
			}
	if (static_cast<long>(pivots.size()) != a.cols())
		throw std::runtime_error("solve_exact: matrix does not have full column rank");
	IntMat c = r.u * b;
	IntMat x(a.cols(), b.cols());
	for (long col = 0; col < b.cols(); ++col) {
		for (long k = static_cast<long>(pivots.size()) - 1; k >= 0; --k) {
			auto [i, j] = pivots[k];
			Int rhs = c(i, col);
			for (long j2 = j + 1; j2 < a.cols(); ++j2)
				rhs -= r.h(i, j2) * x(j2, col);
			if (!divides(r.h(i, j), rhs))
				throw std::runtime_error("solve_exact: no integral solution");
			x(j, col) = divexact(rhs, r.h(i, j));
		}
		for (long i = static_cast<long>(pivots.size()); i < c.rows(); ++i)
			if (c(i, col) != 0)
				throw std::runtime_error("solve_exact: inconsistent system");
	}
	return x;
}

std::vector<Int> snf(const IntMat &m0)
{
	// Unit-pivot sparse sweep first; dense Smith reduction on the residue.
	// Differentials in this project are overwhelmingly ±1-sparse, so the
	// residue is typically tiny.
	struct Cell {
		long col;
		Int v;
	};
	std::vector<std::vector<Cell>> rows(m0.rows());
	for (long i = 0; i < m0.rows(); ++i)
		for (long j = 0; j < m0.cols(); ++j)
			if (m0(i, j) != 0)
				rows[i].push_back({j, m0(i, j)});

	std::vector<char> row_done(m0.rows(), 0), col_done(m0.cols(), 0);
	std::vector<long> col_count(m0.cols(), 0);
	for (auto &r : rows)
		for (auto &c : r)
			++col_count[c.col];

	long units = 0;
	auto row_nnz = [&](long i) { return static_cast<long>(rows[i].size()); };
	for (;;) {
		long best_i = -1, best_j = -1;
		long best_score = -1;
		for (long i = 0; i < m0.rows(); ++i) {
			if (row_done[i])
				continue;
			for (const auto &c : rows[i]) {
				if (col_done[c.col] || !is_unit(c.v))
					continue;
				long score = (row_nnz(i) - 1) * (col_count[c.col] - 1);
				if (best_score < 0 || score < best_score) {
					best_score = score;
					best_i = i;
					best_j = c.col;
				}
				if (best_score == 0)
					break;
			}
			if (best_score == 0)
				break;
		}
		if (best_i < 0)
			break;
		// Eliminate column best_j using the unit pivot.
		Int pv;
		for (const auto &c : rows[best_i])
			if (c.col == best_j)
				pv = c.v;
		for (long i = 0; i < m0.rows(); ++i) {
			if (i == best_i || row_done[i])
				continue;
			Int f;
			bool has = false;
			for (const auto &c : rows[i])
				if (c.col == best_j) {
					has = true;
					f = c.v;
				}
			if (!has)
				continue;
			// row_i -= (f/pv) * row_pivot
			const Int q = divexact(f, pv);
			std::vector<Cell> merged;
			merged.reserve(rows[i].size() + rows[best_i].size());
			auto a = rows[i].begin(), ae = rows[i].end();
			auto b = rows[best_i].begin(), be = rows[best_i].end();
			while (a != ae || b != be) {
				if (b == be || (a != ae && a->col < b->col)) {
					merged.push_back(*a++);
				} else if (a == ae || b->col < a->col) {
					Int nv = -q * b->v;
					if (nv != 0)
						merged.push_back({b->col, nv});
					++col_count[b->col];
					++b;
				} else {
					Int nv = a->v - q * b->v;
					if (nv != 0)
						merged.push_back({a->col, nv});
					else
						--col_count[a->col];
					++a;
					++b;
				}
			}
			rows[i] = std::move(merged);
		}
		for (const auto &c : rows[best_i])
			--col_count[c.col];
		row_done[best_i] = 1;
		col_done[best_j] = 1;
		++units;
	}

	// Collect the residue into a dense matrix.
	std::vector<long> live_cols;
	std::vector<long> col_index(m0.cols(), -1);
	for (long j = 0; j < m0.cols(); ++j)
		if (!col_done[j]) {
			col_index[j] = static_cast<long>(live_cols.size());
			live_cols.push_back(j);
		}
	std::vector<long> live_rows;
	for (long i = 0; i < m0.rows(); ++i)
		if (!row_done[i] && !rows[i].empty())
			live_rows.push_back(i);

	IntMat d(static_cast<long>(live_rows.size()),
	         static_cast<long>(live_cols.size()));
	for (long i = 0; i < d.rows(); ++i)
		for (const auto &c : rows[live_rows[i]])
			d(i, col_index[c.col]) = c.v;

	std::vector<Int> factors(units, Int(1));

	// Plain dense Smith on the residue.
	long top = 0;
	long nr = d.rows(), nc = d.cols();
	while (top < nr && top < nc) {
		// Find smallest nonzero |entry| in the remaining block.
		long pi = -1, pj = -1;
		for (long i = top; i < nr; ++i)
			for (long j = top; j < nc; ++j)
				if (d(i, j) != 0 &&
				    (pi < 0 || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0)) {
					pi = i;
					pj = j;
				}
		if (pi < 0)
			break;
		for (long j = 0; j < nc; ++j)
			std::swap(d(top, j), d(pi, j));
		for (long i = 0; i < nr; ++i)
			std::swap(d(i, top), d(i, pj));

		bool clean = true;
		for (long i = top + 1; i < nr; ++i)
			if (d(i, top) != 0) {
				if (divides(d(top, top), d(i, top))) {
					const Int f = divexact(d(i, top), d(top, top));
					for (long j = top; j < nc; ++j)
						d(i, j) -= f * d(top, j);
				} else {
					clean = false;
					Int s, t;
					const Int g = gcdext(d(top, top), d(i, top), s, t);
					const Int af = divexact(d(top, top), g),
					          bf = divexact(d(i, top), g);
					for (long j = top; j < nc; ++j) {
						Int x = d(top, j), y = d(i, j);
						d(top, j) = s * x + t * y;
						d(i, j) = af * y - bf * x;
					}
				}
			}
		for (long j = top + 1; j < nc; ++j)
			if (d(top, j) != 0) {
				if (divides(d(top, top), d(top, j))) {
					const Int f = divexact(d(top, j), d(top, top));
					for (long i = top; i < nr; ++i)
						d(i, j) -= f * d(i, top);
				} else {
					clean = false;
					Int s, t;
					const Int g = gcdext(d(top, top), d(top, j), s, t);
					const Int af = divexact(d(top, top), g),
					          bf = divexact(d(top, j), g);
					for (long i = top; i < nr; ++i) {
						Int x = d(i, top), y = d(i, j);
						d(i, top) = s * x + t * y;
						d(i, j) = af * y - bf * x;
					}
				}
			}
		if (!clean)
			continue; // eliminate again with the improved pivot
		// Ensure the pivot divides the remaining block.
		bool divides_all = true;
		for (long i = top + 1; i < nr && divides_all; ++i)
			for (long j = top + 1; j < nc && divides_all; ++j)
				if (!divides(d(top, top), d(i, j))) {
					for (long j2 = top; j2 < nc; ++j2)
						d(top, j2) += d(i, j2);
					divides_all = false;
				}
		if (!divides_all)
			continue;
		factors.push_back(abs(d(top, top)));
		++top;
	}

	std::sort(factors.begin(), factors.end());
	return factors;
}

bool LatticeBuilder::insert(std::vector<Int> v)
{
	assert(static_cast<long>(v.size()) == cols_);
	for (long c = 0; c < cols_; ++c) {
		if (v[c] == 0)
			continue;
		auto it = rows_.find(c);
		if (it == rows_.end()) {
			if (v[c] < 0)
				for (auto &x : v)
					x = -x;
			rows_.emplace(c, std::move(v));
			return true;
		}
		std::vector<Int> &p = it->second;
		const Int a = p[c], b = v[c];
		if (divides(a, b)) {
			const Int f = divexact(b, a);
			for (long j = c; j < cols_; ++j)
				v[j] -= f * p[j];
		} else {
			Int s, t;
			const Int g = gcdext(a, b, s, t);
			const Int af = divexact(a, g), bf = divexact(b, g);
			std::vector<Int> np(cols_);
			for (long j = c; j < cols_; ++j) {
				np[j] = s * p[j] + t * v[j];
				v[j] = af * v[j] - bf * p[j];
			}
			p = std::move(np);
		}
	}
	return false;
}

IntMat LatticeBuilder::basis_matrix() const
{
	IntMat m(rank(), cols_);
	long i = 0;
	for (const auto &[piv, row] : rows_) {
		for (long j = 0; j < cols_; ++j)
			m(i, j) = row[j];
		++i;
	}
	// Reduce above pivots for a canonical echelon basis.
	return hnf(m).h;
}

std::vector<Int> LatticeBuilder::quotient_torsion() const
{
	std::vector<Int> factors = snf(basis_matrix());
	std::vector<Int> nontrivial;
	for (const Int &f : factors)
		if (f > 1)
			nontrivial.push_back(f);
	return nontrivial;
}

bool SparseEliminator::insert(SparseVec v)
{
	auto content_reduce = [](SparseVec &w) {
		if (w.empty())
			return;
		Int g = 0;
		for (auto &[c, x] : w) {
			g = gcd(g, x);
			if (g == 1)
				break;
		}
		if (g > 1)
			for (auto &[c, x] : w)
				x = divexact(x, g);
		if (w.front().second < 0)
			for (auto &[c, x] : w)
				x = -x;
	};
	content_reduce(v);
	while (!v.empty()) {
		const long c = v.front().first;
		auto it = rows_.find(c);
		if (it == rows_.end()) {
			rows_.emplace(c, std::move(v));
			return true;
		}
		SparseVec &p = it->second;
		const Int a = p.front().second, b = v.front().second;
		// v <- (a/g) v - (b/g) p  (kills column c); p <- s p + t v (pivot g)
		Int s, t;
		const Int g = gcdext(a, b, s, t);
		const Int af = divexact(a, g), bf = divexact(b, g);
		SparseVec nv, np;
		nv.reserve(v.size() + p.size());
		const bool update_pivot = !divides(a, b);
		if (update_pivot)
			np.reserve(v.size() + p.size());
		auto x = v.begin(), xe = v.end();
		auto y = p.begin(), ye = p.end();
		while (x != xe || y != ye) {
			long col;
			Int xv = 0, yv = 0;
			if (y == ye || (x != xe && x->first < y->first)) {
				col = x->first;
				xv = x->second;
				++x;
			} else if (x == xe || y->first < x->first) {
				col = y->first;
				yv = y->second;
				++y;
			} else {
				col = x->first;
				xv = x->second;
				yv = y->second;
				++x;
				++y;
			}
			Int nxv = af * xv - bf * yv;
			if (nxv != 0)
				nv.emplace_back(col, nxv);
			if (update_pivot) {
				Int npv = s * yv + t * xv;
				if (npv != 0)
					np.emplace_back(col, npv);
			}
		}
		if (update_pivot)
			p = std::move(np);
		v = std::move(nv);
		content_reduce(v);
	}
	return false;
}

} // namespace grext
