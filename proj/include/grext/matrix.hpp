#pragma once

#include "grext/numeric.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace grext {

/// Dense matrix over Int, row-major. Immutable use after construction is the
/// norm in this codebase; entries are assignable while a matrix is being
/// assembled.
class IntMat {
public:
	IntMat() = default;
	IntMat(long rows, long cols)
	    : rows_(rows), cols_(cols),
	      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
	{
	}

	static IntMat identity(long n)
	{
		IntMat m(n, n);
		for (long i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	long rows() const { return rows_; }
	long cols() const { return cols_; }

	Int &operator()(long i, long j)
	{
		return a_[static_cast<std::size_t>(i) * cols_ + j];
	}
	const Int &operator()(long i, long j) const
	{
		return a_[static_cast<std::size_t>(i) * cols_ + j];
	}

	bool is_zero() const
	{
		for (const auto &x : a_)
			if (x != 0)
				return false;
		return true;
	}

	friend bool operator==(const IntMat &a, const IntMat &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
	}

	IntMat transpose() const;

	IntMat &operator+=(const IntMat &b);
	IntMat &operator-=(const IntMat &b);
	IntMat &operator*=(const Int &c);

	friend IntMat operator+(IntMat a, const IntMat &b) { return a += b; }
	friend IntMat operator-(IntMat a, const IntMat &b) { return a -= b; }
	friend IntMat operator*(const IntMat &a, const IntMat &b);
	friend IntMat operator*(const Int &c, IntMat a) { return a *= c; }
	friend IntMat operator-(IntMat a)
	{
		return a *= Int(-1);
	}

	/// Number of nonzero entries.
	long nnz() const;

private:
	long rows_ = 0, cols_ = 0;
	std::vector<Int> a_;
};

IntMat kronecker(const IntMat &a, const IntMat &b);
IntMat block_diag(const IntMat &a, const IntMat &b);
IntMat hstack(const IntMat &a, const IntMat &b);
IntMat vstack(const IntMat &a, const IntMat &b);

/// Triplet interchange format: "rows cols; (i, j, value)*", zero-based
/// indices, entries in row-major order. Used for regression fixtures.
void write_triplets(std::ostream &os, const IntMat &m);
IntMat read_triplets(std::istream &is);

std::ostream &operator<<(std::ostream &os, const IntMat &m);

/// Sparse row: sorted (column, value) pairs, values nonzero.
using SparseVec = std::vector<std::pair<long, Int>>;

SparseVec sparse_row(const IntMat &m, long i);

} // namespace grext
