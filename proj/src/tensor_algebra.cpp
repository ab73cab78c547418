#include "grext/tensor_algebra.hpp"

#include "grext/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace grext {

int TruncTensor::min_degree() const
{
	int d = cutoff + 1;
	for (const auto &[m, c] : coeffs)
		d = std::min<int>(d, static_cast<int>(m.size()));
	return d;
}

TruncTensor tt_zero(int alphabet, int cutoff)
{
	return TruncTensor{alphabet, cutoff, {}};
}

TruncTensor tt_one(int alphabet, int cutoff)
{
	TruncTensor t{alphabet, cutoff, {}};
	t.coeffs[{}] = 1;
	return t;
}

TruncTensor tt_gen(int alphabet, int cutoff, int i)
{
	if (i < 1 || i > alphabet)
		throw std::out_of_range("tt_gen: index out of range");
	TruncTensor t{alphabet, cutoff, {}};
	if (cutoff >= 1)
		t.coeffs[{i}] = 1;
	return t;
}

void tt_add_term(TruncTensor &t, const Monomial &m, const Int &c)
{
	if (c == 0 || static_cast<int>(m.size()) > t.cutoff)
		return;
	Int &slot = t.coeffs[m];
	slot += c;
	if (slot == 0)
		t.coeffs.erase(m);
}

TruncTensor operator+(const TruncTensor &a, const TruncTensor &b)
{
	TruncTensor r = a;
	for (const auto &[m, c] : b.coeffs)
		tt_add_term(r, m, c);
	return r;
}

TruncTensor operator-(const TruncTensor &a, const TruncTensor &b)
{
	TruncTensor r = a;
	for (const auto &[m, c] : b.coeffs)
		tt_add_term(r, m, -c);
	return r;
}

TruncTensor operator*(const TruncTensor &a, const TruncTensor &b)
{
	TruncTensor r{a.alphabet, a.cutoff, {}};
	for (const auto &[ma, ca] : a.coeffs)
		for (const auto &[mb, cb] : b.coeffs) {
			if (static_cast<int>(ma.size() + mb.size()) > r.cutoff)
				continue;
			Monomial m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			tt_add_term(r, m, ca * cb);
		}
	return r;
}

TruncTensor operator*(const Int &c, const TruncTensor &a)
{
	TruncTensor r{a.alphabet, a.cutoff, {}};
	if (c == 0)
		return r;
	for (const auto &[m, v] : a.coeffs)
		r.coeffs[m] = c * v;
	return r;
}

TruncTensor magnus_expand(const Word &w, int cutoff)
{
	TruncTensor r = tt_one(w.rank, cutoff);
	for (int l : w.letters) {
		TruncTensor factor = tt_one(w.rank, cutoff);
		if (l > 0) {
			// 1 + X_i
			tt_add_term(factor, {l}, 1);
		} else {
			// (1 + X_i)^{-1} = sum_k (-X_i)^k, truncated
			Monomial m;
			Int sign = 1;
			for (int k = 1; k <= cutoff; ++k) {
				m.push_back(-l);
				sign = -sign;
				tt_add_term(factor, m, sign);
			}
		}
		r = r * factor;
	}
	return r;
}

std::string format_monomial(const Monomial &m)
{
	if (m.empty())
		return "1";
	std::ostringstream os;
	for (std::size_t k = 0; k < m.size(); ++k)
		os << (k ? "." : "") << "X" << m[k];
	return os.str();
}

Monomial parse_monomial(const std::string &text)
{
	Monomial m;
	std::size_t pos = 0;
	if (text == "1")
		return m;
	while (pos < text.size()) {
		if (text[pos] != 'X')
			throw parse_error("expected 'X<k>'", pos);
		++pos;
		std::size_t start = pos;
		while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
			++pos;
		if (pos == start)
			throw parse_error("expected index", pos);
		m.push_back(std::stoi(text.substr(start, pos - start)));
		if (pos < text.size()) {
			if (text[pos] != '.')
				throw parse_error("expected '.'", pos);
			++pos;
		}
	}
	return m;
}

std::vector<Monomial> monomials_of_degree(int alphabet, int degree)
{
	std::vector<Monomial> out;
	if (degree == 0) {
		out.push_back({});
		return out;
	}
	if (alphabet == 0)
		return out;
	Monomial m(degree, 1);
	for (;;) {
		out.push_back(m);
		int k = degree - 1;
		while (k >= 0 && m[k] == alphabet)
			m[k--] = 1;
		if (k < 0)
			break;
		++m[k];
	}
	return out;
}

} // namespace grext
