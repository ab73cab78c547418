#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grext/errors.hpp"
#include "grext/fin_ab_group.hpp"
#include "grext/gr.hpp"
#include "grext/normal_form.hpp"
#include "grext/word.hpp"

#include <random>
#include <sstream>

using namespace grext;

namespace {

IntMat random_matrix(std::mt19937_64 &rng, long rows, long cols, int max_abs)
{
	std::uniform_int_distribution<int> d(-max_abs, max_abs);
	IntMat m(rows, cols);
	for (long i = 0; i < rows; ++i)
		for (long j = 0; j < cols; ++j)
			m(i, j) = d(rng);
	return m;
}

// random unimodular matrix: product of elementary row operations
IntMat random_unimodular(std::mt19937_64 &rng, long n)
{
	std::uniform_int_distribution<int> coeff(-2, 2);
	std::uniform_int_distribution<long> idx(0, n - 1);
	IntMat u = IntMat::identity(n);
	for (int step = 0; step < 4 * n; ++step) {
		long i = idx(rng), j = idx(rng);
		if (i == j)
			continue;
		Int c = coeff(rng);
		for (long k = 0; k < n; ++k)
			u(i, k) += c * u(j, k);
	}
	return u;
}

} // namespace

TEST_CASE("word reduction")
{
	CHECK(reduce(1, {1, -1}).is_identity());
	CHECK(reduce(2, {1, 2, -2, 1}) == reduce(2, {1, 1}));
	Word w = reduce(2, {1, 2, -1});
	CHECK(w.letters == std::vector<int>{1, 2, -1});
	// idempotent and length-nonincreasing
	std::mt19937_64 rng(1);
	std::uniform_int_distribution<int> letter(1, 3);
	std::uniform_int_distribution<int> sign(0, 1);
	for (int trial = 0; trial < 50; ++trial) {
		std::vector<int> letters;
		for (int i = 0; i < 12; ++i)
			letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
		Word r = reduce(3, letters);
		CHECK(r.length() <= static_cast<long>(letters.size()));
		CHECK(reduce(3, r.letters) == r);
	}
	CHECK_THROWS_AS(reduce(1, {2}), std::out_of_range);
}

TEST_CASE("word parse and format round trip")
{
	Word w = parse_word("x1*x2^-1*x1");
	CHECK(w.rank == 2);
	CHECK(w.letters == std::vector<int>{1, -2, 1});
	CHECK(format_word(w) == "x1*x2^-1*x1");
	CHECK(parse_word("1").is_identity());
	CHECK_THROWS_AS(parse_word("x1**x2"), parse_error);
	CHECK_THROWS_AS(parse_word("y1"), parse_error);
}

TEST_CASE("compose: identity laws and substitution")
{
	GrMorphism f{1, 2, {parse_word("x1*x2", 2)}};
	CHECK(compose(identity_morphism(2), f) == f);
	CHECK(compose(f, identity_morphism(1)) == f);

	// x -> x1 x2 followed by x1 -> y, x2 -> y gives x -> y^2
	GrMorphism g{2, 1, {parse_word("x1", 1), parse_word("x1", 1)}};
	GrMorphism gf = compose(g, f);
	CHECK(gf.images[0] == parse_word("x1*x1", 1));

	// substitution of a single letter
	GrMorphism h{1, 1, {parse_word("x1", 1)}};
	GrMorphism k{1, 2, {parse_word("x1*x2^-1", 2)}};
	CHECK(compose(k, h).images[0] == parse_word("x1*x2^-1", 2));

	CHECK_THROWS_AS(compose(g, g), std::invalid_argument); // 2 -> 1 twice: rank mismatch
}

TEST_CASE("compose associativity on random triples")
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<int> rank(1, 3);
	std::uniform_int_distribution<int> len(0, 4);
	std::uniform_int_distribution<int> sign(0, 1);
	auto random_morphism = [&](int src, int dst) {
		GrMorphism m{src, dst, {}};
		std::uniform_int_distribution<int> letter(1, dst);
		for (int i = 0; i < src; ++i) {
			std::vector<int> ls;
			int l = len(rng);
			for (int k = 0; k < l && dst > 0; ++k)
				ls.push_back(letter(rng) * (sign(rng) ? 1 : -1));
			m.images.push_back(reduce(dst, ls));
		}
		return m;
	};
	for (int trial = 0; trial < 100; ++trial) {
		int a = rank(rng), b = rank(rng), c = rank(rng), d = rank(rng);
		GrMorphism f = random_morphism(a, b), g = random_morphism(b, c),
		           h = random_morphism(c, d);
		CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
	}
}

TEST_CASE("bar cofaces")
{
	GrMorphism c10 = bar_coface(1, 0);
	CHECK(c10.src_rank == 0);
	CHECK(c10.dst_rank == 1);
	CHECK(c10.images.empty());

	CHECK(bar_coface(2, 1).images[0] == parse_word("x1*x2", 2));
	CHECK(bar_coface(2, 2).images[0] == parse_word("x1", 2));
	CHECK(bar_coface(2, 0).images[0] == parse_word("x2", 2));
	CHECK_THROWS_AS(bar_coface(2, 3), std::out_of_range);
}

TEST_CASE("cosimplicial identities up to rank 5")
{
	// d^j d^i = d^i d^{j-1} for i < j
	for (int n = 1; n <= 4; ++n)
		for (int j = 0; j <= n + 1; ++j)
			for (int i = 0; i < j; ++i)
				CHECK(compose(bar_coface(n + 1, j), bar_coface(n, i)) ==
				      compose(bar_coface(n + 1, i), bar_coface(n, j - 1)));
}

TEST_CASE("fold")
{
	CHECK(fold(1) == identity_morphism(1));
	CHECK(fold(2).images[0] == parse_word("x1*x2", 2));
	// doubling each generator of fold(2) equals fold(4) up to relabeling
	GrMorphism doubling{2, 4,
	                    {parse_word("x1*x2", 4), parse_word("x3*x4", 4)}};
	CHECK(compose(doubling, fold(2)) == fold(4));
}

TEST_CASE("hnf examples")
{
	IntMat id = IntMat::identity(3);
	HnfResult r = hnf(id);
	CHECK(r.h == id);
	CHECK(r.u == id);

	IntMat m(2, 2);
	m(0, 0) = 2;
	m(0, 1) = 4;
	m(1, 0) = 6;
	m(1, 1) = 8;
	HnfResult r2 = hnf(m);
	CHECK(r2.h(0, 0) == 2);
	CHECK(r2.h(1, 0) == 0);
	CHECK(r2.h(1, 1) == 4);
	CHECK(r2.h(0, 1) == 0); // reduced above the pivot: 4 mod 4
	CHECK(r2.u * m == r2.h);

	IntMat z(2, 3);
	HnfResult r3 = hnf(z);
	CHECK(r3.h == z);
	CHECK(r3.u == IntMat::identity(2));
}

TEST_CASE("snf examples")
{
	IntMat m(2, 2);
	m(0, 0) = 2;
	m(0, 1) = 4;
	m(1, 0) = 6;
	m(1, 1) = 8;
	CHECK(snf(m) == std::vector<Int>{2, 4});
	CHECK(snf(IntMat::identity(4)) == std::vector<Int>(4, Int(1)));
	CHECK(snf(IntMat(1, 1)).empty());
}

TEST_CASE("snf: divisibility chain and unimodular invariance")
{
	std::mt19937_64 rng(42);
	for (int trial = 0; trial < 30; ++trial) {
		IntMat m = random_matrix(rng, 5, 4, 6);
		std::vector<Int> f = snf(m);
		for (std::size_t i = 0; i + 1 < f.size(); ++i)
			CHECK(divides(f[i], f[i + 1]));
		IntMat u = random_unimodular(rng, 5), v = random_unimodular(rng, 4);
		CHECK(snf(u * m * v) == f);
	}
}

TEST_CASE("rank, kernel, rank-nullity")
{
	std::mt19937_64 rng(99);
	for (int trial = 0; trial < 30; ++trial) {
		IntMat m = random_matrix(rng, 6, 5, 5);
		IntMat k = kernel_basis(m);
		CHECK(rank(m) + k.cols() == m.cols());
		CHECK((m * k).is_zero());
		if (k.cols() > 0)
			CHECK(rank(k) == k.cols());
	}
}

TEST_CASE("solve_exact")
{
	std::mt19937_64 rng(5);
	IntMat a = random_matrix(rng, 5, 3, 4);
	while (rank(a) < 3)
		a = random_matrix(rng, 5, 3, 4);
	IntMat x = random_matrix(rng, 3, 2, 7);
	IntMat b = a * x;
	CHECK(solve_exact(a, b) == x);
}

TEST_CASE("homology of small complexes")
{
	// 0 -> Z --2--> Z -> 0
	IntMat two(1, 1);
	two(0, 0) = 2;
	FinAbGroup h0 = homology_step(IntMat(0, 1), two);
	CHECK(h0.free_rank == 0);
	CHECK(h0.torsion == std::vector<Int>{2});
	FinAbGroup h1 = homology_step(two, IntMat(1, 0));
	CHECK(h1.is_zero());

	// zero differential
	IntMat zero(1, 1);
	FinAbGroup g0 = homology_step(IntMat(0, 1), zero);
	CHECK(g0.free_rank == 1);
	CHECK(g0.torsion.empty());
	FinAbGroup g1 = homology_step(zero, IntMat(1, 0));
	CHECK(g1.free_rank == 1);

	CHECK(homology_step(two, IntMat(1, 0)).str() == "0");
	CHECK(h0.str() == "Z/2");
}

TEST_CASE("homology invariance under unimodular change of basis")
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 20; ++trial) {
		IntMat in = random_matrix(rng, 4, 3, 3);
		IntMat k = kernel_basis(in.transpose()); // rows annihilated...
		// build a two-step complex out∘in = 0 by taking out = projection on
		// the kernel of in^T ... simpler: out = zero
		IntMat out(0, 4);
		FinAbGroup h = homology_step(out, in);
		IntMat u = random_unimodular(rng, 4);
		// change basis of the middle module: in -> u*in, out -> out*u^{-1}
		FinAbGroup h2 = homology_step(out, u * in);
		CHECK(h.free_rank == h2.free_rank);
		CHECK(h.torsion == h2.torsion);
	}
}

TEST_CASE("euler characteristic")
{
	std::mt19937_64 rng(13);
	for (int trial = 0; trial < 10; ++trial) {
		// random two-step cochain complex 0 -> C0 -> C1 -> C2 -> 0 with
		// d1*d0 = 0: take d0 = kernel basis of a random d1
		IntMat d1 = random_matrix(rng, 3, 5, 3);
		IntMat d0 = kernel_basis(d1);
		long c0 = d0.cols(), c1 = 5, c2 = 3;
		FinAbGroup h0 = homology_step(d0, IntMat(c0, 0));
		FinAbGroup h1 = homology_step(d1, d0);
		FinAbGroup h2 = homology_step(IntMat(0, c2), d1);
		CHECK(c0 - c1 + c2 ==
		      h0.free_rank - h1.free_rank + h2.free_rank);
	}
}

TEST_CASE("lattice builder matches dense rank and torsion")
{
	std::mt19937_64 rng(17);
	for (int trial = 0; trial < 20; ++trial) {
		IntMat m = random_matrix(rng, 7, 5, 4);
		LatticeBuilder lb(5);
		for (long i = 0; i < m.rows(); ++i) {
			std::vector<Int> row(5);
			for (long j = 0; j < 5; ++j)
				row[j] = m(i, j);
			lb.insert(row);
		}
		CHECK(lb.rank() == rank(m));
		std::vector<Int> expected;
		for (const Int &f : snf(m))
			if (f > 1)
				expected.push_back(f);
		CHECK(lb.quotient_torsion() == expected);
	}
}

TEST_CASE("sparse eliminator rank agrees with dense")
{
	std::mt19937_64 rng(19);
	for (int trial = 0; trial < 20; ++trial) {
		IntMat m = random_matrix(rng, 8, 6, 3);
		SparseEliminator e(6);
		for (long i = 0; i < m.rows(); ++i)
			e.insert(sparse_row(m, i));
		CHECK(e.rank() == rank(m));
	}
}

TEST_CASE("triplet interchange round trip")
{
	std::mt19937_64 rng(23);
	IntMat m = random_matrix(rng, 4, 6, 9);
	std::stringstream ss;
	write_triplets(ss, m);
	CHECK(read_triplets(ss) == m);
}
