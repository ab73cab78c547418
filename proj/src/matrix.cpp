#include "grext/matrix.hpp"

#include "grext/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace grext {

IntMat IntMat::transpose() const
{
	IntMat t(cols_, rows_);
	for (long i = 0; i < rows_; ++i)
		for (long j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

IntMat &IntMat::operator+=(const IntMat &b)
{
	assert(rows_ == b.rows_ && cols_ == b.cols_);
	for (std::size_t i = 0; i < a_.size(); ++i)
		a_[i] += b.a_[i];
	return *this;
}

IntMat &IntMat::operator-=(const IntMat &b)
{
	assert(rows_ == b.rows_ && cols_ == b.cols_);
	for (std::size_t i = 0; i < a_.size(); ++i)
		a_[i] -= b.a_[i];
	return *this;
}

IntMat &IntMat::operator*=(const Int &c)
{
	for (auto &x : a_)
		x *= c;
	return *this;
}

IntMat operator*(const IntMat &a, const IntMat &b)
{
	assert(a.cols() == b.rows());
	IntMat r(a.rows(), b.cols());
	for (long i = 0; i < a.rows(); ++i)
		for (long k = 0; k < a.cols(); ++k) {
			const Int &aik = a(i, k);
			if (aik == 0)
				continue;
			for (long j = 0; j < b.cols(); ++j) {
				const Int &bkj = b(k, j);
				if (bkj != 0)
					r(i, j) += aik * bkj;
			}
		}
	return r;
}

long IntMat::nnz() const
{
	long n = 0;
	for (const auto &x : a_)
		if (x != 0)
			++n;
	return n;
}

IntMat kronecker(const IntMat &a, const IntMat &b)
{
	IntMat r(a.rows() * b.rows(), a.cols() * b.cols());
	for (long i = 0; i < a.rows(); ++i)
		for (long j = 0; j < a.cols(); ++j) {
			const Int &aij = a(i, j);
			if (aij == 0)
				continue;
			for (long k = 0; k < b.rows(); ++k)
				for (long l = 0; l < b.cols(); ++l) {
					const Int &bkl = b(k, l);
					if (bkl != 0)
						r(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
				}
		}
	return r;
}

IntMat block_diag(const IntMat &a, const IntMat &b)
{
	IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
	for (long i = 0; i < a.rows(); ++i)
		for (long j = 0; j < a.cols(); ++j)
			r(i, j) = a(i, j);
	for (long i = 0; i < b.rows(); ++i)
		for (long j = 0; j < b.cols(); ++j)
			r(a.rows() + i, a.cols() + j) = b(i, j);
	return r;
}

IntMat hstack(const IntMat &a, const IntMat &b)
{
	assert(a.rows() == b.rows());
	IntMat r(a.rows(), a.cols() + b.cols());
	for (long i = 0; i < a.rows(); ++i) {
		for (long j = 0; j < a.cols(); ++j)
			r(i, j) = a(i, j);
		for (long j = 0; j < b.cols(); ++j)
			r(i, a.cols() + j) = b(i, j);
	}
	return r;
}

IntMat vstack(const IntMat &a, const IntMat &b)
{
	assert(a.cols() == b.cols());
	IntMat r(a.rows() + b.rows(), a.cols());
	for (long i = 0; i < a.rows(); ++i)
		for (long j = 0; j < a.cols(); ++j)
			r(i, j) = a(i, j);
	for (long i = 0; i < b.rows(); ++i)
		for (long j = 0; j < b.cols(); ++j)
			r(a.rows() + i, j) = b(i, j);
	return r;
}

void write_triplets(std::ostream &os, const IntMat &m)
{
	os << m.rows() << " " << m.cols() << ";";
	for (long i = 0; i < m.rows(); ++i)
		for (long j = 0; j < m.cols(); ++j)
			if (m(i, j) != 0)
				os << " (" << i << ", " << j << ", " << m(i, j) << ")";
	os << "\n";
}

IntMat read_triplets(std::istream &is)
{
	long rows, cols;
	char c;
	if (!(is >> rows >> cols >> c) || c != ';')
		throw parse_error("expected 'rows cols;'", 0);
	IntMat m(rows, cols);
	while (is >> c) {
		if (c != '(')
			throw parse_error("expected '('", 0);
		long i, j;
		std::string val;
		char sep;
		if (!(is >> i >> sep) || sep != ',')
			throw parse_error("bad triplet row", 0);
		if (!(is >> j >> sep) || sep != ',')
			throw parse_error("bad triplet column", 0);
		while (is.get(c) && c != ')')
			if (!isspace(static_cast<unsigned char>(c)))
				val.push_back(c);
		if (i < 0 || i >= rows || j < 0 || j >= cols)
			throw parse_error("triplet index out of range", 0);
		m(i, j) = Int(val);
	}
	return m;
}

std::ostream &operator<<(std::ostream &os, const IntMat &m)
{
	for (long i = 0; i < m.rows(); ++i) {
		os << (i == 0 ? "[" : " ");
		for (long j = 0; j < m.cols(); ++j)
			os << m(i, j) << (j + 1 < m.cols() ? " " : "");
		os << (i + 1 < m.rows() ? "\n" : "]");
	}
	return os;
}

SparseVec sparse_row(const IntMat &m, long i)
{
	SparseVec v;
	for (long j = 0; j < m.cols(); ++j)
		if (m(i, j) != 0)
			v.emplace_back(j, m(i, j));
	return v;
}

} // namespace grext
