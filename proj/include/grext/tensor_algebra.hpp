#pragma once

#include "grext/numeric.hpp"
#include "grext/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace grext {

/// Noncommutative monomial X_{i_1}...X_{i_r}: the letter sequence, letters in
/// [1, alphabet]. The empty monomial is the unit.
using Monomial = std::vector<int>;

/// Element of the tensor algebra on alphabet generators, truncated above
/// total degree `cutoff`. No zero coefficients are stored.
struct TruncTensor {
	int alphabet = 0;
	int cutoff = 0;
	std::map<Monomial, Int> coeffs;

	bool is_zero() const { return coeffs.empty(); }
	Int coeff(const Monomial &m) const
	{
		auto it = coeffs.find(m);
		return it == coeffs.end() ? Int(0) : it->second;
	}
	/// Smallest degree of a monomial with nonzero coefficient
	/// (cutoff + 1 for zero).
	int min_degree() const;

	friend bool operator==(const TruncTensor &a, const TruncTensor &b)
	{
		return a.alphabet == b.alphabet && a.cutoff == b.cutoff &&
		       a.coeffs == b.coeffs;
	}
};

TruncTensor tt_zero(int alphabet, int cutoff);
TruncTensor tt_one(int alphabet, int cutoff);
TruncTensor tt_gen(int alphabet, int cutoff, int i);

void tt_add_term(TruncTensor &t, const Monomial &m, const Int &c);
TruncTensor operator+(const TruncTensor &a, const TruncTensor &b);
TruncTensor operator-(const TruncTensor &a, const TruncTensor &b);
TruncTensor operator*(const TruncTensor &a, const TruncTensor &b);
TruncTensor operator*(const Int &c, const TruncTensor &a);

/// Magnus expansion of a reduced word: x_i -> 1 + X_i, extended
/// multiplicatively, truncated above degree cutoff. The alphabet is the
/// rank of the word's ambient free group.
TruncTensor magnus_expand(const Word &w, int cutoff);

/// Monomial text format "X1.X2.X1"; the unit is "1".
std::string format_monomial(const Monomial &m);
Monomial parse_monomial(const std::string &text);

/// All monomials of the given exact degree over {1..alphabet}, in
/// lexicographic order.
std::vector<Monomial> monomials_of_degree(int alphabet, int degree);

} // namespace grext
