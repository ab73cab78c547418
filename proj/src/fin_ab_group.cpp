#include "grext/fin_ab_group.hpp"

#include "grext/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace grext {

std::string FinAbGroup::str() const
{
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	if (free_rank == 1) {
		os << "Z";
		first = false;
	} else if (free_rank > 1) {
		os << "Z^" << free_rank;
		first = false;
	}
	for (const Int &t : torsion) {
		if (!first)
			os << " + ";
		os << "Z/" << t;
		first = false;
	}
	return os.str();
}

FinAbGroup homology_step(const IntMat &out, const IntMat &in)
{
	const long dim = out.cols();
	if (in.rows() != dim)
		throw std::runtime_error("homology_step: dimension mismatch");
	if (!(out * in).is_zero())
		throw std::runtime_error("homology_step: maps do not compose to zero");
	FinAbGroup h;
	h.free_rank = dim - rank(out) - rank(in);
	// ker(out) is saturated in the ambient module, so the torsion of
	// ker(out)/im(in) equals the torsion of the full cokernel of `in`.
	for (const Int &f : snf(in))
		if (f > 1)
			h.torsion.push_back(f);
	return h;
}

long betti_step(const IntMat &out, const IntMat &in)
{
	const long dim = out.cols();
	if (in.rows() != dim)
		throw std::runtime_error("betti_step: dimension mismatch");
	return dim - rank(out) - rank(in);
}

} // namespace grext
