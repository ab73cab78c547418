#pragma once

#include "grext/functor_expr.hpp"
#include "grext/gr.hpp"
#include "grext/matrix.hpp"

#include <string>
#include <vector>

namespace grext {

/// Dimension of F(Z^{*k}).
long functor_dim(const ExprPtr &f, int k);

/// Deterministic basis labels of F(Z^{*k}).
///
/// Conventions: Ab has basis x1..xk; Const(m) has e1..em at every rank;
/// AbPow(d) and Tensor use tuple labels "l⊗r" in row-major order (leftmost
/// factor most significant); Sum lists the left block then the right block;
/// Passi(d) is based by the monomials X_{i_1}..X_{i_r} of degree 1..d
/// ordered by (degree, lex).
std::vector<std::string> basis_labels(const ExprPtr &f, int k);

/// Matrix of F(phi) : F(Z^{*src}) -> F(Z^{*dst}) on the bases above.
/// Functorial: induced(id) = id and induced(g∘f) = induced(g)·induced(f).
IntMat induced(const ExprPtr &f, const GrMorphism &phi);

} // namespace grext
