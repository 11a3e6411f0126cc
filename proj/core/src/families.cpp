#include "supero/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "supero/error.hpp"
#include "supero/linalg.hpp"
#include "supero/subalgebra.hpp"

namespace supero {

namespace {

SparseMatrix elementary(std::size_t size, std::vector<Triplet> entries) {
  return SparseMatrix::from_triplets(size, size, std::move(entries));
}

std::string pair_name(const char* fam, int a, int b) {
  return std::string(fam) + "(" + std::to_string(a) + "|" + std::to_string(b) + ")";
}

std::vector<Parity> slots(std::size_t even, std::size_t odd) {
  std::vector<Parity> s(even, Parity::even);
  s.insert(s.end(), odd, Parity::odd);
  return s;
}

/// Orders matrices even-first (stable) and returns the realization.
MatrixRealization graded_realization(std::size_t size, std::vector<Parity> slot_parity,
                                     std::vector<SparseMatrix> mats) {
  std::vector<SparseMatrix> even, odd;
  for (auto& m : mats) {
    auto p = matrix_parity(m, slot_parity);
    if (!p) throw ConventionError("family basis matrix is not homogeneous");
    (*p == Parity::even ? even : odd).push_back(std::move(m));
  }
  even.insert(even.end(), std::make_move_iterator(odd.begin()), std::make_move_iterator(odd.end()));
  return MatrixRealization{size, std::move(slot_parity), std::move(even)};
}

std::vector<std::size_t> diagonal_indices(const MatrixRealization& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.matrices.size(); ++i) {
    if (r.matrices[i].is_diagonal()) out.push_back(i);
  }
  return out;
}

/// Index of e_{rc} in the gl(m|n) basis.
std::size_t gl_index(std::size_t m, std::size_t n, std::size_t r, std::size_t c) {
  const std::size_t N = m + n;
  // even entries: (r,c) both < m or both >= m, row-major
  const bool odd = (r < m) != (c < m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (((i < m) != (j < m)) != odd) continue;
      if (i == r && j == c) return odd ? (m * m + n * n) + k : k;
      ++k;
    }
  }
  return N * N;
}

}  // namespace

AlgebraPtr build_gl(int m, int n) {
  if (m < 0 || n < 0) throw ParameterError("gl: negative size");
  if (m + n == 0) throw ParameterError("gl(0|0) is the empty algebra");
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<SparseMatrix> mats;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) mats.push_back(elementary(N, {{i, j, 1}}));
  }
  auto real = graded_realization(N, slots(m, n), std::move(mats));
  auto torus = diagonal_indices(real);
  return std::make_shared<const LieSuperalgebra>(
      algebra_from_matrices(pair_name("gl", m, n), std::move(real), std::move(torus)));
}

AlgebraPtr build_sl(int m, int n) {
  if (m < 0 || n < 0) throw ParameterError("sl: negative size");
  if (m + n < 2) throw ParameterError("sl(m|n) needs m + n >= 2");
  auto gl = build_gl(m, n);
  const std::size_t M = static_cast<std::size_t>(m), Nn = static_cast<std::size_t>(n), N = M + Nn;
  std::vector<SparseVector> even, odd;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t idx = gl_index(M, Nn, i, j);
      const bool is_odd = (i < M) != (j < M);
      if (i != j) {
        (is_odd ? odd : even).push_back(SparseVector::unit(idx));
      } else if (i + 1 < N) {
        const bool same_block = (i < M) == (i + 1 < M);
        SparseVector h = SparseVector::unit(idx);
        h.add_scaled(SparseVector::unit(gl_index(M, Nn, i + 1, i + 1)), same_block ? Rational(-1) : Rational(1));
        even.push_back(std::move(h));
      }
    }
  }
  even.insert(even.end(), odd.begin(), odd.end());
  return make_subalgebra(gl, std::move(even), pair_name("sl", m, n)).as_algebra();
}

AlgebraPtr build_q(int n) {
  if (n <= 0) throw ParameterError("q(n) needs n >= 1");
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<SparseMatrix> mats;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) mats.push_back(elementary(2 * N, {{i, j, 1}, {N + i, N + j, 1}}));
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) mats.push_back(elementary(2 * N, {{i, N + j, 1}, {N + i, j, 1}}));
  }
  auto real = graded_realization(2 * N, slots(N, N), std::move(mats));
  auto torus = diagonal_indices(real);
  return std::make_shared<const LieSuperalgebra>(
      algebra_from_matrices("q(" + std::to_string(n) + ")", std::move(real), std::move(torus)));
}

AlgebraPtr build_p_tilde(int n) {
  if (n < 2) throw UnsupportedError("p~(n) needs n >= 2");
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<SparseMatrix> mats;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      mats.push_back(elementary(2 * N, i == j ? std::vector<Triplet>{{i, i, 1}, {N + i, N + i, -1}}
                                              : std::vector<Triplet>{{i, j, 1}, {N + j, N + i, -1}}));
    }
  }
  // symmetric B block (upper right)
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      mats.push_back(elementary(2 * N, i == j ? std::vector<Triplet>{{i, N + i, 1}}
                                              : std::vector<Triplet>{{i, N + j, 1}, {j, N + i, 1}}));
    }
  }
  // antisymmetric C block (lower left)
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) mats.push_back(elementary(2 * N, {{N + i, j, 1}, {N + j, i, -1}}));
  }
  auto real = graded_realization(2 * N, slots(N, N), std::move(mats));
  auto torus = diagonal_indices(real);
  return std::make_shared<const LieSuperalgebra>(
      algebra_from_matrices("pt(" + std::to_string(n) + ")", std::move(real), std::move(torus)));
}

AlgebraPtr build_p(int n) {
  auto pt = build_p_tilde(n);
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<SparseVector> vs;
  // The even block of p~(n) is row-major over (i, j).
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) {
        vs.push_back(SparseVector::unit(i * N + j));
      } else if (i + 1 < N) {
        SparseVector h = SparseVector::unit(i * N + i);
        h.add_scaled(SparseVector::unit((i + 1) * N + i + 1), Rational(-1));
        vs.push_back(std::move(h));
      }
    }
  }
  for (auto k : pt->indices(Parity::odd)) vs.push_back(SparseVector::unit(k));
  return make_subalgebra(pt, std::move(vs), "p(" + std::to_string(n) + ")").as_algebra();
}

AlgebraPtr build_osp(int m, int two_n) {
  if (two_n % 2 != 0) throw ParameterError("osp(m|2n): the symplectic part needs even size");
  if (m < 1 || two_n < 2) throw ParameterError("osp(m|2n) needs m >= 1 and 2n >= 2");
  const std::size_t M = static_cast<std::size_t>(m), n = static_cast<std::size_t>(two_n / 2), N = M + 2 * n;
  const auto slot = slots(M, 2 * n);
  std::vector<std::vector<int>> form(N, std::vector<int>(N, 0));
  for (std::size_t i = 0; i < M; ++i) form[i][M - 1 - i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    form[M + i][M + n + i] = 1;
    form[M + n + i][M + i] = -1;
  }
  std::vector<SparseMatrix> mats;
  for (unsigned pi = 0; pi < 2; ++pi) {
    // unknowns: entries (r, c) of parity pi, row-major
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<std::vector<std::ptrdiff_t>> slot_of(N, std::vector<std::ptrdiff_t>(N, -1));
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        if ((bit(slot[r]) ^ bit(slot[c])) != pi) continue;
        slot_of[r][c] = static_cast<std::ptrdiff_t>(unknowns.size());
        unknowns.emplace_back(r, c);
      }
    }
    std::vector<SparseVector> rows;
    for (std::size_t u = 0; u < N; ++u) {
      for (std::size_t v = 0; v < N; ++v) {
        std::vector<SparseEntry> es;
        const Rational s = sign_power(pi * bit(slot[u]));
        for (std::size_t r = 0; r < N; ++r) {
          if (form[r][v] != 0 && slot_of[r][u] >= 0) es.push_back({static_cast<std::size_t>(slot_of[r][u]), form[r][v]});
          if (form[u][r] != 0 && slot_of[r][v] >= 0) {
            es.push_back({static_cast<std::size_t>(slot_of[r][v]), s * Rational(form[u][r])});
          }
        }
        rows.push_back(SparseVector::from_entries(std::move(es)));
      }
    }
    auto kernel = kernel_basis(SparseMatrix::from_rows(unknowns.size(), std::move(rows)));
    for (auto& k : kernel) k = k.scaled(Rational(1) / k.leading_value());
    std::stable_sort(kernel.begin(), kernel.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.leading_index() < b.leading_index(); });
    for (const auto& k : kernel) {
      std::vector<Triplet> ts;
      for (const auto& e : k) ts.push_back({unknowns[e.index].first, unknowns[e.index].second, e.value});
      mats.push_back(elementary(N, std::move(ts)));
    }
  }
  MatrixRealization real{N, slot, std::move(mats)};
  auto torus = diagonal_indices(real);
  return std::make_shared<const LieSuperalgebra>(
      algebra_from_matrices(pair_name("osp", m, two_n), std::move(real), std::move(torus)));
}

std::vector<std::string> family_names() { return {"gl", "sl", "q", "pt", "p", "osp"}; }

AlgebraPtr build_family(const std::string& family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw ParameterError(family + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
    }
  };
  if (family == "gl") return need(2), build_gl(params[0], params[1]);
  if (family == "sl") return need(2), build_sl(params[0], params[1]);
  if (family == "osp") return need(2), build_osp(params[0], params[1]);
  if (family == "q") return need(1), build_q(params[0]);
  if (family == "pt") return need(1), build_p_tilde(params[0]);
  if (family == "p") return need(1), build_p(params[0]);
  throw ParameterError("unknown family '" + family + "'");
}

AlgebraPtr even_part(const AlgebraPtr& g) {
  return SubalgebraSpan(g, even_span(g).vectors(), g->name() + "_0").as_algebra();
}

}  // namespace supero
