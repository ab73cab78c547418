#pragma once

#include "grext/fin_ab_group.hpp"

namespace grext {

struct HochschildReport {
	FinAbGroup h0, h1, h2;
	long mult_image_rank = 0;     // rank of the multiplication into T^{>=r}
	long expected_h0_rank = 0;    // weight-w part of T^{>=r+1}
	std::vector<long> dims;       // chain module dimensions, degrees 0..3
};

/// Weight-w component of the normalized Hochschild chain complex
///   ... -> T-bar^{⊗3}⊗T^{>=r} -> T-bar^{⊗2}⊗T^{>=r} -> T-bar⊗T^{>=r}
/// over the tensor algebra on `alphabet` generators, with alternating
/// adjacent-multiplication differentials. Reports H_0, H_1, H_2 and the rank
/// of the extra multiplication map into T^{>=r} (which realizes H_0 as the
/// weight-w part of T^{>=r+1}).
HochschildReport graded_hochschild(int alphabet, int r, int w);

} // namespace grext
