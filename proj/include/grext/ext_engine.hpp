#pragma once

#include "grext/config.hpp"
#include "grext/cross_effect.hpp"
#include "grext/fin_ab_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grext {

enum class BarMode { unnormalized, normalized };

/// Cochain complex of free abelian groups in degrees 0..dims.size()-1;
/// d[i] : C^i -> C^{i+1} (the last degree has no outgoing map stored).
struct CochainComplex {
	std::vector<long> dims;
	std::vector<IntMat> d;

	/// Hard assertion d∘d = 0, demanded of every constructed complex.
	void validate() const;
	FinAbGroup homology(int i) const;
	long betti(int i) const;
};

/// Source of an Ext computation: either the tensor power a^{⊗n} resolved by
/// the (n-fold tensor of the) bar resolution, or the Passi functor q_n(P-bar)
/// resolved by the spliced Hochschild resolutions.
struct ExtSource {
	bool passi = false;
	int n = 1;

	std::string str() const
	{
		return passi ? "passi(" + std::to_string(n) + ")"
		             : (n == 1 ? "a" : "a^" + std::to_string(n));
	}
};

/// Parse "a", "a^n", "a*a*...", or "passi(n)" into an ExtSource; rejects
/// sources the engine cannot resolve.
ExtSource parse_ext_source(const std::string &text);

struct ExtTable {
	std::vector<FinAbGroup> groups; // degrees 0..i_max
	BarMode mode = BarMode::normalized;
	std::vector<long> complex_dims;
	long timing_ms = 0;
};

/// Hom(resolution of a^{⊗n}, F) as a cochain complex in degrees
/// 0..i_max+1. Unnormalized: degree-i module F(Z^{*(i+n)})^{⊕C(i+n-1,n-1)}
/// with alternating coface differentials (slotwise, Koszul signs across
/// slots). Normalized: the same with every module and differential
/// compressed through the cross-effect summands.
CochainComplex bar_cochain_complex(int n, const ExprPtr &f, int i_max,
                                   BarMode mode, const Config &cfg);

/// Ext^*(a^{⊗n}, F) in degrees 0..i_max.
ExtTable ext_ab_pow(int n, const ExprPtr &f, int i_max, BarMode mode,
                    const Config &cfg);

/// Formal term of the spliced resolution of q_n(P-bar): a reduced tensor
/// power P-bar^{⊗m}, carried by a splice label.
struct PassiTerm {
	int tensor_power = 0;
	std::vector<int> label; // bar degrees per splice level, outermost first
};

/// One summand of a resolution differential: u_phi with a sign, mapping
/// P-bar^{⊗a} -> P-bar^{⊗b} for the gr-morphism phi : Z^{*b} -> Z^{*a}.
struct PassiDiffEntry {
	int from = 0; // term index in degree j
	int to = 0;   // term index in degree j-1
	int sign = 1;
	GrMorphism phi;
};

struct PassiResolution {
	int n = 0;
	int length = 0;
	std::vector<std::vector<PassiTerm>> terms;          // per degree 0..length
	std::vector<std::vector<PassiDiffEntry>> diffs;     // diffs[j]: S_j -> S_{j-1}
};

/// The resolution ... -> S_2 -> S_1 -> P-bar -> q_n(P-bar) -> 0 obtained by
/// splicing the normalized Hochschild resolutions level by level; degree-j
/// terms are copies of P-bar^{⊗(j+n)} and all differential entries are
/// signed coface/fold-induced maps.
PassiResolution passi_resolution(int n, int length);

/// Hom(passi_resolution, F): degree-j module is a sum of cr_{j+n}(F).
CochainComplex passi_hom_complex(const PassiResolution &res, const ExprPtr &f,
                                 int i_max, const Config &cfg);

/// Ext^*(q_n(P-bar), F) in degrees 0..i_max. Throws std::invalid_argument if
/// the resolution length is insufficient (length must be >= i_max + 1).
ExtTable ext_passi(int n, const ExprPtr &f, int i_max, const Config &cfg,
                   int length = -1);

/// Betti numbers (free ranks) of the same complexes.
std::vector<long> rational_ext(const ExtSource &src, const ExprPtr &f,
                               int i_max, const Config &cfg);

/// Dispatch on the source kind. For ExtSource a^{⊗n} uses `mode`; the Passi
/// route is normalized by construction.
ExtTable ext(const ExtSource &src, const ExprPtr &f, int i_max, BarMode mode,
             const Config &cfg);

} // namespace grext
