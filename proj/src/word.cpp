#include "grext/word.hpp"

#include "grext/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace grext {

Word reduce(int rank, const std::vector<int> &letters)
{
	Word w;
	w.rank = rank;
	w.letters.reserve(letters.size());
	for (int l : letters) {
		if (l == 0 || std::abs(l) > rank)
			throw std::out_of_range("generator index out of range");
		if (!w.letters.empty() && w.letters.back() == -l)
			w.letters.pop_back();
		else
			w.letters.push_back(l);
	}
	return w;
}

Word generator_word(int rank, int signed_index)
{
	return reduce(rank, {signed_index});
}

Word concat(const Word &a, const Word &b)
{
	if (a.rank != b.rank)
		throw std::invalid_argument("concat: rank mismatch");
	std::vector<int> ls = a.letters;
	ls.insert(ls.end(), b.letters.begin(), b.letters.end());
	return reduce(a.rank, ls);
}

Word inverse(const Word &w)
{
	Word r;
	r.rank = w.rank;
	r.letters.reserve(w.letters.size());
	for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
		r.letters.push_back(-*it);
	return r;
}

long exponent_sum(const Word &w, int i)
{
	long s = 0;
	for (int l : w.letters) {
		if (l == i)
			++s;
		else if (l == -i)
			--s;
	}
	return s;
}

std::string format_word(const Word &w)
{
	if (w.is_identity())
		return "1";
	std::ostringstream os;
	for (std::size_t k = 0; k < w.letters.size(); ++k) {
		if (k)
			os << "*";
		os << "x" << std::abs(w.letters[k]);
		if (w.letters[k] < 0)
			os << "^-1";
	}
	return os.str();
}

Word parse_word(const std::string &text, int rank)
{
	std::vector<int> letters;
	std::size_t pos = 0;
	auto skip_ws = [&] {
		while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos])))
			++pos;
	};
	skip_ws();
	if (pos < text.size() && text[pos] == '1' &&
	    text.find_first_not_of(" \t1", pos) == std::string::npos) {
		// identity word
	} else {
		bool expect_letter = true;
		while (pos < text.size()) {
			skip_ws();
			if (pos >= text.size())
				break;
			if (!expect_letter) {
				if (text[pos] != '*')
					throw parse_error("expected '*'", pos);
				++pos;
				skip_ws();
			}
			if (pos >= text.size() || text[pos] != 'x')
				throw parse_error("expected generator 'x<k>'", pos);
			++pos;
			std::size_t start = pos;
			while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
				++pos;
			if (pos == start)
				throw parse_error("expected generator index", pos);
			int idx = std::stoi(text.substr(start, pos - start));
			if (idx == 0)
				throw parse_error("generator index must be positive", start);
			int sign = 1;
			if (pos < text.size() && text[pos] == '^') {
				++pos;
				if (text.compare(pos, 2, "-1") != 0)
					throw parse_error("only exponent -1 is supported", pos);
				pos += 2;
				sign = -1;
			}
			letters.push_back(sign * idx);
			expect_letter = false;
		}
	}
	int r = rank;
	if (r < 0) {
		r = 0;
		for (int l : letters)
			r = std::max(r, std::abs(l));
	}
	return reduce(r, letters);
}

} // namespace grext
