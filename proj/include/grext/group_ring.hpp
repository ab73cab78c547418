#pragma once

#include "grext/tensor_algebra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace grext {

/// Group element of G = F_{n_1} x ... x F_{n_s}: one reduced word per factor.
using GroupElement = std::vector<Word>;

/// Total word length of a group element (sum over factors).
long element_length(const GroupElement &g);

/// Z[G]/I^{cutoff+1} for G a finite direct product of free groups, modeled
/// through the Magnus expansion: the basis consists of tuples of monomials,
/// one per factor, of total degree <= cutoff. The image of I^r is exactly
/// the span of the basis tuples of total degree >= r.
class TruncGroupRing {
public:
	TruncGroupRing(std::vector<int> factors, int cutoff);

	const std::vector<int> &factors() const { return factors_; }
	int cutoff() const { return cutoff_; }
	long dim() const { return static_cast<long>(basis_.size()); }

	using BasisTuple = std::vector<Monomial>;
	const BasisTuple &basis_tuple(long i) const { return basis_[i]; }
	long index_of(const BasisTuple &t) const;
	static int total_degree(const BasisTuple &t);

	/// Number of basis tuples of total degree exactly r; throws if
	/// r > cutoff. Equals n^r for a single free factor F_n and the
	/// convolution of factor counts in general.
	long graded_rank(int r) const;

	/// First basis index of total degree >= r (basis is sorted by degree).
	long degree_offset(int r) const;

private:
	std::vector<int> factors_;
	int cutoff_;
	std::vector<BasisTuple> basis_;
	std::map<BasisTuple, long> index_;
	std::vector<long> degree_offset_; // degree_offset_[r] = first index of degree r
};

/// Closed-form convolution of graded ranks: the number of degree-r words in
/// the tensor product of the factor tensor algebras. Independent route used
/// to cross-check TruncGroupRing::graded_rank.
long graded_rank_formula(const std::vector<int> &factors, int r);

/// Element of a TruncGroupRing, as coefficients on basis indices.
struct RingElement {
	const TruncGroupRing *ring = nullptr;
	std::map<long, Int> coeffs;

	bool is_zero() const { return coeffs.empty(); }
	Int coeff(long i) const
	{
		auto it = coeffs.find(i);
		return it == coeffs.end() ? Int(0) : it->second;
	}
	/// Coefficient of the empty tuple.
	Int constant_term() const;
	/// Smallest total degree with a nonzero coefficient (cutoff+1 if zero).
	int min_degree() const;
	std::vector<Int> dense() const;

	friend bool operator==(const RingElement &a, const RingElement &b)
	{
		return a.coeffs == b.coeffs;
	}
};

RingElement re_zero(const TruncGroupRing &ring);
RingElement re_one(const TruncGroupRing &ring);
RingElement operator+(const RingElement &a, const RingElement &b);
RingElement operator-(const RingElement &a, const RingElement &b);
RingElement operator*(const RingElement &a, const RingElement &b);
RingElement operator*(const Int &c, const RingElement &a);

/// Magnus image of a single group element [g].
RingElement embed(const TruncGroupRing &ring, const GroupElement &g);

/// Image of an integer combination of group elements.
RingElement ring_element(const TruncGroupRing &ring,
                         const std::vector<std::pair<Int, GroupElement>> &comb);

/// All elements of G with total word length <= radius, sorted by
/// (length, lexicographic). Deterministic.
std::vector<GroupElement> ball(const std::vector<int> &factors, long radius);

struct BallReport {
	long ball_size = 0;           // |B_L|
	long rank = 0;                // rank of the ball quotient at radius L
	long rank_prev = 0;           // same at radius L-1
	std::vector<Int> torsion;     // torsion of the quotient at radius L
	bool stable = false;          // rank == rank_prev
	long relations = 0;           // relations used at radius L
};

/// Independent presentation oracle for Z[G]/I^{N+1}: free abelian group on
/// the ball of radius L modulo the expansions of g (x_{j_1}-1)...(x_{j_{N+1}}-1)
/// whose subset products all stay in the ball. Reports the rank at radii L-1
/// and L for a stabilization check. Requires L >= N+1.
BallReport ball_presentation(const std::vector<int> &factors, int N, long L,
                             long max_ball = 200000);

struct GradedTorReport {
	long kernel_rank = 0;
	long image_rank = 0;
	long target_rank = 0;          // weight-w part of T^{>=r}
	long expected_image_rank = 0;  // weight-w part of T^{>=r+1}
	long cokernel_rank() const { return target_rank - image_rank; }
};

/// Weight-w component of the two-term complex (T^{>=r})^n -> T^{>=r},
/// (a_i) -> sum a_i X_i. The kernel is expected to vanish (the graded module
/// is free) and the image is expected to be the weight-w part of T^{>=r+1}.
GradedTorReport graded_tor_check(int alphabet, int r, int w);

} // namespace grext
