#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace grext {

/// Arbitrary-precision integer. All linear algebra in this project is exact;
/// torsion detection would be meaningless with machine integers.
using Int = mpz_class;

inline Int gcd(const Int &a, const Int &b)
{
	Int g;
	mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return g;
}

/// g = gcd(a,b) together with s,t such that s*a + t*b = g.
inline Int gcdext(const Int &a, const Int &b, Int &s, Int &t)
{
	Int g;
	mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
	           b.get_mpz_t());
	return g;
}

inline bool divides(const Int &d, const Int &a)
{
	return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; requires d | a.
inline Int divexact(const Int &a, const Int &d)
{
	Int q;
	mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
	return q;
}

inline long to_long(const Int &a)
{
	assert(a.fits_slong_p());
	return mpz_get_si(a.get_mpz_t());
}

inline bool is_unit(const Int &a) { return a == 1 || a == -1; }

} // namespace grext
