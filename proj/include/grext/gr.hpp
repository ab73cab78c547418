#pragma once

#include "grext/word.hpp"

#include <vector>

namespace grext {

/// Morphism Z^{*src_rank} -> Z^{*dst_rank} in the skeletal category of
/// finitely generated free groups: the tuple of images of the generators.
/// Equality is componentwise word equality.
struct GrMorphism {
	int src_rank = 0;
	int dst_rank = 0;
	std::vector<Word> images; // images[j]: image of x_{j+1}, rank dst_rank

	friend bool operator==(const GrMorphism &a, const GrMorphism &b) = default;
};

GrMorphism identity_morphism(int n);

/// Image of a word under the substitution x_j -> images[j], freely reduced.
Word apply(const GrMorphism &f, const Word &w);

/// Composition g ∘ f; requires f.dst_rank == g.src_rank (throws otherwise).
GrMorphism compose(const GrMorphism &g, const GrMorphism &f);

/// Coface Z^{*(n-1)} -> Z^{*n} of the bar construction, 0 <= i <= n:
///   i = 0:      x_j -> x_{j+1}
///   0 < i < n:  x_j -> x_j (j < i), x_i -> x_i x_{i+1}, x_j -> x_{j+1} (j > i)
///   i = n:      x_j -> x_j
GrMorphism bar_coface(int n, int i);

/// The d-fold multiplication Z -> Z^{*d}, x -> x_1 x_2 ... x_d.
GrMorphism fold(int d);

/// Endomorphism of Z^{*n} swapping x_p and x_{p+1}, 1 <= p < n.
GrMorphism swap_generators(int n, int p);

/// Endomorphism of Z^{*n} sending x_1 to its inverse, fixing the rest.
GrMorphism invert_first(int n);

/// Endomorphism of Z^{*n} sending x_i to the identity, fixing the rest.
/// These retractions cut out cross-effects.
GrMorphism kill_generator(int n, int i);

/// Endomorphism of Z^{*n} given by x_i -> x_{sigma[i-1]} for a permutation
/// sigma of {1..n}.
GrMorphism permute_generators(int n, const std::vector<int> &sigma);

std::string format_morphism(const GrMorphism &f);

} // namespace grext
