#include "grext/functor_eval.hpp"

#include "grext/tensor_algebra.hpp"

#include <map>
#include <stdexcept>

namespace grext {

namespace {

long power(long base, int exp)
{
	long p = 1;
	for (int i = 0; i < exp; ++i)
		p *= base;
	return p;
}

/// dim of Passi(d) at rank k: k + k^2 + ... + k^d (reduced: no unit).
long passi_dim(int d, int k)
{
	long s = 0;
	for (int r = 1; r <= d; ++r)
		s += power(k, r);
	return s;
}

/// Index of a nonempty monomial over {1..k} of degree <= d among the Passi
/// basis, ordered by (degree, lex).
long passi_index(const Monomial &m, int k)
{
	long off = 0;
	for (int r = 1; r < static_cast<int>(m.size()); ++r)
		off += power(k, r);
	long lex = 0;
	for (int l : m)
		lex = lex * k + (l - 1);
	return off + lex;
}

IntMat induced_ab(const GrMorphism &phi)
{
	IntMat m(phi.dst_rank, phi.src_rank);
	for (int j = 0; j < phi.src_rank; ++j)
		for (int i = 1; i <= phi.dst_rank; ++i)
			m(i - 1, j) = exponent_sum(phi.images[static_cast<std::size_t>(j)], i);
	return m;
}

IntMat induced_passi(int d, const GrMorphism &phi)
{
	const int src = phi.src_rank, dst = phi.dst_rank;
	IntMat out(passi_dim(d, dst), passi_dim(d, src));
	if (src == 0)
		return out;
	// X_j -> mu(phi(x_j)) - 1, extended multiplicatively and truncated.
	std::vector<TruncTensor> gen_image;
	for (int j = 0; j < src; ++j) {
		TruncTensor t = magnus_expand(phi.images[static_cast<std::size_t>(j)], d);
		tt_add_term(t, {}, -1);
		gen_image.push_back(std::move(t));
	}
	std::map<Monomial, TruncTensor> cache;
	cache[{}] = tt_one(dst, d);
	long col = 0;
	for (int deg = 1; deg <= d; ++deg)
		for (const Monomial &mono : monomials_of_degree(src, deg)) {
			Monomial prefix(mono.begin(), mono.end() - 1);
			const TruncTensor &head = cache.at(prefix);
			TruncTensor val = head * gen_image[static_cast<std::size_t>(mono.back() - 1)];
			for (const auto &[m, c] : val.coeffs)
				if (!m.empty())
					out(passi_index(m, dst), col) = c;
			cache[mono] = std::move(val);
			++col;
		}
	return out;
}

} // namespace

long functor_dim(const ExprPtr &f, int k)
{
	switch (f->kind) {
	case FunctorExpr::Kind::Const:
		return f->param;
	case FunctorExpr::Kind::Ab:
		return k;
	case FunctorExpr::Kind::AbPow:
		return power(k, f->param);
	case FunctorExpr::Kind::Passi:
		return passi_dim(f->param, k);
	case FunctorExpr::Kind::Tensor:
		return functor_dim(f->left, k) * functor_dim(f->right, k);
	case FunctorExpr::Kind::Sum:
		return functor_dim(f->left, k) + functor_dim(f->right, k);
	}
	return 0;
}

std::vector<std::string> basis_labels(const ExprPtr &f, int k)
{
	std::vector<std::string> out;
	switch (f->kind) {
	case FunctorExpr::Kind::Const:
		for (int i = 1; i <= f->param; ++i)
			out.push_back("e" + std::to_string(i));
		break;
	case FunctorExpr::Kind::Ab:
		for (int i = 1; i <= k; ++i)
			out.push_back("x" + std::to_string(i));
		break;
	case FunctorExpr::Kind::AbPow:
		for (const Monomial &m : monomials_of_degree(k, f->param)) {
			std::string s;
			for (std::size_t i = 0; i < m.size(); ++i)
				s += (i ? "⊗x" : "x") + std::to_string(m[i]);
			out.push_back(s);
		}
		break;
	case FunctorExpr::Kind::Passi:
		for (int deg = 1; deg <= f->param; ++deg)
			for (const Monomial &m : monomials_of_degree(k, deg))
				out.push_back(format_monomial(m));
		break;
	case FunctorExpr::Kind::Tensor:
		for (const std::string &l : basis_labels(f->left, k))
			for (const std::string &r : basis_labels(f->right, k))
				out.push_back(l + "⊗" + r);
		break;
	case FunctorExpr::Kind::Sum: {
		for (const std::string &l : basis_labels(f->left, k))
			out.push_back("L:" + l);
		for (const std::string &r : basis_labels(f->right, k))
			out.push_back("R:" + r);
		break;
	}
	}
	return out;
}

IntMat induced(const ExprPtr &f, const GrMorphism &phi)
{
	switch (f->kind) {
	case FunctorExpr::Kind::Const:
		return IntMat::identity(f->param);
	case FunctorExpr::Kind::Ab:
		return induced_ab(phi);
	case FunctorExpr::Kind::AbPow: {
		IntMat a = induced_ab(phi);
		IntMat m = a;
		for (int i = 1; i < f->param; ++i)
			m = kronecker(m, a);
		return m;
	}
	case FunctorExpr::Kind::Passi:
		return induced_passi(f->param, phi);
	case FunctorExpr::Kind::Tensor:
		return kronecker(induced(f->left, phi), induced(f->right, phi));
	case FunctorExpr::Kind::Sum:
		return block_diag(induced(f->left, phi), induced(f->right, phi));
	}
	throw std::logic_error("induced: unknown node");
}

} // namespace grext
