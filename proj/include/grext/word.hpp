#pragma once

#include <string>
#include <vector>

namespace grext {

/// Freely reduced word in the free group F_rank. Letters are signed
/// generator indices: +i stands for x_i, -i for x_i^{-1}, 1 <= i <= rank.
/// Words are kept reduced at all times, so equality is sequence equality.
struct Word {
	int rank = 0;
	std::vector<int> letters;

	long length() const { return static_cast<long>(letters.size()); }
	bool is_identity() const { return letters.empty(); }

	friend bool operator==(const Word &a, const Word &b) = default;
	friend auto operator<=>(const Word &a, const Word &b) = default;
};

/// Freely reduce a raw letter sequence. Throws std::out_of_range if a letter
/// index is 0 or exceeds rank. Idempotent.
Word reduce(int rank, const std::vector<int> &letters);

/// Identity word in F_rank.
inline Word identity_word(int rank) { return Word{rank, {}}; }

/// Single generator x_i (or its inverse for negative i).
Word generator_word(int rank, int signed_index);

Word concat(const Word &a, const Word &b);
Word inverse(const Word &w);

/// Exponent sum of generator i (1-based) in w.
long exponent_sum(const Word &w, int i);

/// Text syntax: letters joined by '*', inverses marked '^-1',
/// e.g. "x1*x2^-1*x1". The identity is "1".
std::string format_word(const Word &w);

/// Parse the text syntax. If rank < 0 the rank is inferred as the largest
/// generator index occurring.
Word parse_word(const std::string &text, int rank = -1);

} // namespace grext
