#pragma once

#include <span>
#include <string>
#include <vector>

#include "supero/superalgebra.hpp"

namespace supero {

/// gl(m|n) on elementary matrices, even block first, row-major in each block.
AlgebraPtr build_gl(int m, int n);
/// sl(m|n) as the supertrace-zero subalgebra of gl(m|n). Cartan part:
/// e_kk - e_{k+1,k+1} inside a block, e_mm + e_{m+1,m+1} across the blocks.
AlgebraPtr build_sl(int m, int n);
/// q(n): even diag(A, A), odd [[0, B], [B, 0]].
AlgebraPtr build_q(int n);
/// p~(n): [[A, B], [C, -A^T]] with B symmetric and C antisymmetric.
AlgebraPtr build_p_tilde(int n);
/// p(n): the derived subalgebra of p~(n) (even part sl(n), full odd part).
AlgebraPtr build_p(int n);
/// osp(m|two_n): supermatrices X with B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0 for the
/// even form that is antidiagonal on C^m and the standard symplectic form on C^{2n}.
AlgebraPtr build_osp(int m, int two_n);

/// Dispatch on a family name: gl, sl, q, pt (p~), p, osp.
AlgebraPtr build_family(const std::string& family, std::span<const int> params);
/// Family names accepted by build_family.
std::vector<std::string> family_names();

/// g_0 as an algebra in the basis of even basis vectors of g.
AlgebraPtr even_part(const AlgebraPtr& g);

}  // namespace supero
