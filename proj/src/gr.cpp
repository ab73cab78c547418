#include "grext/gr.hpp"

#include <sstream>
#include <stdexcept>

namespace grext {

GrMorphism identity_morphism(int n)
{
	GrMorphism f{n, n, {}};
	for (int j = 1; j <= n; ++j)
		f.images.push_back(generator_word(n, j));
	return f;
}

Word apply(const GrMorphism &f, const Word &w)
{
	if (w.rank != f.src_rank)
		throw std::invalid_argument("apply: word rank does not match morphism source");
	std::vector<int> letters;
	for (int l : w.letters) {
		const Word &im = f.images[static_cast<std::size_t>(std::abs(l)) - 1];
		if (l > 0)
			letters.insert(letters.end(), im.letters.begin(), im.letters.end());
		else
			for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it)
				letters.push_back(-*it);
	}
	return reduce(f.dst_rank, letters);
}

GrMorphism compose(const GrMorphism &g, const GrMorphism &f)
{
	if (f.dst_rank != g.src_rank)
		throw std::invalid_argument("compose: rank mismatch");
	GrMorphism h{f.src_rank, g.dst_rank, {}};
	h.images.reserve(f.images.size());
	for (const Word &w : f.images)
		h.images.push_back(apply(g, w));
	return h;
}

GrMorphism bar_coface(int n, int i)
{
	if (n < 1 || i < 0 || i > n)
		throw std::out_of_range("bar_coface: need n >= 1 and 0 <= i <= n");
	GrMorphism f{n - 1, n, {}};
	for (int j = 1; j <= n - 1; ++j) {
		if (i == 0)
			f.images.push_back(generator_word(n, j + 1));
		else if (i == n)
			f.images.push_back(generator_word(n, j));
		else if (j < i)
			f.images.push_back(generator_word(n, j));
		else if (j == i)
			f.images.push_back(reduce(n, {i, i + 1}));
		else
			f.images.push_back(generator_word(n, j + 1));
	}
	return f;
}

GrMorphism fold(int d)
{
	if (d < 1)
		throw std::out_of_range("fold: need d >= 1");
	std::vector<int> letters;
	for (int j = 1; j <= d; ++j)
		letters.push_back(j);
	return GrMorphism{1, d, {reduce(d, letters)}};
}

GrMorphism swap_generators(int n, int p)
{
	if (p < 1 || p >= n)
		throw std::out_of_range("swap_generators: need 1 <= p < n");
	GrMorphism f = identity_morphism(n);
	f.images[p - 1] = generator_word(n, p + 1);
	f.images[p] = generator_word(n, p);
	return f;
}

GrMorphism invert_first(int n)
{
	if (n < 1)
		throw std::out_of_range("invert_first: need n >= 1");
	GrMorphism f = identity_morphism(n);
	f.images[0] = generator_word(n, -1);
	return f;
}

GrMorphism kill_generator(int n, int i)
{
	if (i < 1 || i > n)
		throw std::out_of_range("kill_generator: need 1 <= i <= n");
	GrMorphism f = identity_morphism(n);
	f.images[i - 1] = identity_word(n);
	return f;
}

GrMorphism permute_generators(int n, const std::vector<int> &sigma)
{
	if (static_cast<int>(sigma.size()) != n)
		throw std::invalid_argument("permute_generators: bad permutation size");
	GrMorphism f{n, n, {}};
	for (int j = 0; j < n; ++j)
		f.images.push_back(generator_word(n, sigma[static_cast<std::size_t>(j)]));
	return f;
}

std::string format_morphism(const GrMorphism &f)
{
	std::ostringstream os;
	os << "(" << f.src_rank << " -> " << f.dst_rank << ":";
	for (std::size_t j = 0; j < f.images.size(); ++j)
		os << " x" << j + 1 << "->" << format_word(f.images[j]);
	os << ")";
	return os.str();
}

} // namespace grext
