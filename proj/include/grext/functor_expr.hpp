#pragma once

#include <memory>
#include <string>
#include <vector>

namespace grext {

/// Syntax tree of a polynomial functor on the category of f.g. free groups.
///
/// Nodes:
///   Const(m)   — constant functor Z^m
///   Ab         — abelianization, G -> G_ab
///   AbPow(d)   — d-th tensor power of Ab
///   Passi(d)   — d-th Passi functor q_d(P-bar), G -> I(G)/I^{d+1}(G)
///   Tensor     — pointwise tensor product
///   Sum        — pointwise direct sum
struct FunctorExpr;
using ExprPtr = std::shared_ptr<const FunctorExpr>;

struct FunctorExpr {
	enum class Kind { Const, Ab, AbPow, Passi, Tensor, Sum };

	Kind kind;
	int param = 0; // m for Const, d for AbPow/Passi
	ExprPtr left, right;
};

namespace fe {
ExprPtr constant(int m);
ExprPtr ab();
ExprPtr ab_pow(int d);
ExprPtr passi(int d);
ExprPtr tensor(ExprPtr l, ExprPtr r);
ExprPtr sum(ExprPtr l, ExprPtr r);
} // namespace fe

/// Polynomial degree bound: deg Const = 0, deg Ab = 1, deg AbPow(d) =
/// deg Passi(d) = d, deg Tensor = sum, deg Sum = max.
int degree(const ExprPtr &f);

/// Canonical textual key, also the printed form ("a", "a^2", "passi(2)",
/// "(a*passi(1))", "(a+const(1))").
std::string expr_key(const ExprPtr &f);

/// Grammar:  expr := term ('+' term)* ; term := atom ('*' atom)* ;
/// atom := 'a' | 'a^' INT | 'passi(' INT ')' | 'const(' INT ')' | '(' expr ')'.
/// Whitespace insignificant. Tensor chains of pure abelianization powers are
/// canonicalized, so "a^3" and "a*a*a" parse to the same tree. Degrees above
/// max_degree are rejected.
ExprPtr parse_functor(const std::string &text, int max_degree = 8);

} // namespace grext
