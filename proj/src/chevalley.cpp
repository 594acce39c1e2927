#include "fcsph/chevalley.hpp"

#include <functional>

#include "fcsph/errors.hpp"

namespace fcsph {

std::shared_ptr<const ChevalleyAlgebra> ChevalleyAlgebra::build(RootSystemPtr rs, SignConvention conv) {
  std::shared_ptr<ChevalleyAlgebra> L(new ChevalleyAlgebra());
  L->rs_ = std::move(rs);
  L->conv_ = conv;
  L->build_constants();
  return L;
}

void ChevalleyAlgebra::build_constants() {
  const RootSystem& rs = *rs_;
  const int N = rs.num_roots();

  coroot_.assign(N, std::vector<int>(rs.rank(), 0));
  for (int a = 0; a < N; ++a) {
    for (int k = 0; k < rs.rank(); ++k) {
      const int num = rs.coords(a)[k] * rs.norm2(rs.simple(k));
      if (num % rs.norm2(a) != 0) throw Error("coroot expansion is not integral");
      coroot_[a][k] = num / rs.norm2(a);
    }
  }

  // Extraspecial pair (eps, xi - eps) for every positive root xi that is a sum.
  std::vector<int> special(N, -1);
  for (int xi = 0; xi < rs.num_positive(); ++xi) {
    for (int eps = 0; eps < rs.num_positive(); ++eps) {
      const int eta = rs.difference(xi, eps);
      if (eta < 0 || !rs.is_positive(eta)) continue;
      // Alternate tie-break: the last simple root instead of the first root.
      if (conv_ == SignConvention::Alternate && rs.height(eps) != 1) continue;
      special[xi] = eps;
      if (conv_ == SignConvention::Standard) break;
    }
  }

  std::vector<mpq_class> memo(static_cast<std::size_t>(N) * N);
  std::vector<char> known(static_cast<std::size_t>(N) * N, 0);
  auto nn = [&](int r) { return mpq_class(rs.norm2(r)); };

  std::function<mpq_class(int, int)> value = [&](int a, int b) -> mpq_class {
    const int s = rs.sum(a, b);
    if (s < 0) return 0;
    const std::size_t key = static_cast<std::size_t>(a) * N + b;
    if (known[key]) return memo[key];
    mpq_class v;
    if (rs.is_positive(a) && rs.is_positive(b)) {
      const int eps = special[s];
      const int eta = rs.difference(s, eps);
      const mpq_class ne = rs.root_string_p(eps, eta) + 1;
      if (a == eps && b == eta) {
        v = ne;
      } else if (a == eta && b == eps) {
        v = -ne;
      } else {
        // Four-term relation for a + b - eps - eta = 0.
        mpq_class acc = 0;
        const int be = rs.difference(b, eps);
        if (be >= 0) acc += value(b, rs.negate(eps)) * value(a, rs.negate(eta)) / nn(be);
        const int ae = rs.difference(a, eps);
        if (ae >= 0) acc += value(rs.negate(eps), a) * value(b, rs.negate(eta)) / nn(ae);
        v = mpq_class(rs.norm2(s)) / ne * acc;
      }
    } else if (!rs.is_positive(a) && !rs.is_positive(b)) {
      v = -value(rs.negate(a), rs.negate(b));
    } else {
      // a + b + c = 0 gives N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
      const int c = rs.negate(s);
      if (rs.is_positive(b) == rs.is_positive(c)) {
        v = mpq_class(rs.norm2(c), rs.norm2(a)) * value(b, c);
      } else {
        v = mpq_class(rs.norm2(c), rs.norm2(b)) * value(c, a);
      }
    }
    v.canonicalize();
    memo[key] = v;
    known[key] = 1;
    return v;
  };

  n_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      if (rs.sum(a, b) < 0) continue;
      const mpq_class v = value(a, b);
      if (v.get_den() != 1 || v == 0) throw Error("structure constant is not a nonzero integer");
      n_[a * N + b] = static_cast<int>(v.get_num().get_si());
    }
  }
}

Element ChevalleyAlgebra::basis(int k) const {
  Element x = zero();
  x[k] = 1;
  return x;
}

std::vector<std::pair<int, int>> ChevalleyAlgebra::bracket_basis(int i, int j) const {
  const RootSystem& rs = *rs_;
  const int nr = rs.num_roots();
  std::vector<std::pair<int, int>> out;
  if (i < nr && j < nr) {
    if (j == rs.negate(i)) {
      for (int k = 0; k < rs.rank(); ++k)
        if (coroot_[i][k]) out.emplace_back(h(k), coroot_[i][k]);
    } else if (const int s = rs.sum(i, j); s >= 0) {
      out.emplace_back(s, N(i, j));
    }
  } else if (i < nr && j >= nr) {
    const int c = -rs.pairing(i, rs.simple(j - nr));
    if (c) out.emplace_back(i, c);
  } else if (i >= nr && j < nr) {
    const int c = rs.pairing(j, rs.simple(i - nr));
    if (c) out.emplace_back(j, c);
  }
  return out;
}

namespace {

void check_element(const ChevalleyAlgebra& L, const Element& x) {
  if (static_cast<int>(x.size()) != L.dim()) throw MismatchedSystems();
}

bool is_zero(const Element& x) {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

// Integer matrix of ad(x) for x scaled to integral coefficients, stored by rows.
struct SparseRows {
  int dim = 0;
  std::vector<std::vector<std::pair<int, mpz_class>>> rows;
};

SparseRows integral_ad(const ChevalleyAlgebra& L, const Element& x) {
  mpz_class den = 1;
  for (const auto& c : x)
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  SparseRows m;
  m.dim = L.dim();
  m.rows.resize(m.dim);
  std::vector<mpz_class> col(m.dim);
  for (int j = 0; j < m.dim; ++j) {
    for (auto& v : col) v = 0;
    for (int i = 0; i < m.dim; ++i) {
      if (x[i] == 0) continue;
      const mpz_class ci = x[i].get_num() * (den / x[i].get_den());
      for (const auto& [k, n] : L.bracket_basis(i, j)) col[k] += ci * n;
    }
    for (int k = 0; k < m.dim; ++k)
      if (col[k] != 0) m.rows[k].emplace_back(j, col[k]);
  }
  return m;
}

using Dense = std::vector<std::vector<mpz_class>>;

Dense to_dense(const SparseRows& m) {
  Dense d(m.dim, std::vector<mpz_class>(m.dim));
  for (int i = 0; i < m.dim; ++i)
    for (const auto& [j, v] : m.rows[i]) d[i][j] = v;
  return d;
}

Dense multiply(const SparseRows& m, const Dense& p) {
  Dense out(m.dim, std::vector<mpz_class>(m.dim));
  for (int i = 0; i < m.dim; ++i)
    for (const auto& [l, v] : m.rows[i])
      for (int j = 0; j < m.dim; ++j)
        if (p[l][j] != 0) out[i][j] += v * p[l][j];
  return out;
}

bool dense_zero(const Dense& d) {
  for (const auto& row : d)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

Element bracket(const ChevalleyAlgebra& L, const Element& x, const Element& y) {
  check_element(L, x);
  check_element(L, y);
  Element out = L.zero();
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, n] : L.bracket_basis(i, j)) out[k] += x[i] * y[j] * n;
    }
  }
  return out;
}

Element nilpotent(const ChevalleyAlgebra& L, const std::map<int, mpq_class>& coeffs) {
  Element x = L.zero();
  for (const auto& [r, c] : coeffs) {
    if (r < 0 || !L.system().is_positive(r)) throw InvalidArgument("nilpotent element must be supported on positive roots");
    x[r] = c;
  }
  return x;
}

RootSet support(const ChevalleyAlgebra& L, const Element& x) {
  check_element(L, x);
  RootSet s = L.system().empty_set();
  for (int r = 0; r < L.system().num_positive(); ++r)
    if (x[r] != 0) s.insert(r);
  for (int k = L.system().num_positive(); k < L.dim(); ++k)
    if (x[k] != 0) throw InvalidArgument("element is not in the positive nilradical");
  return s;
}

std::vector<std::vector<mpq_class>> ad_matrix(const ChevalleyAlgebra& L, const Element& x) {
  check_element(L, x);
  std::vector<std::vector<mpq_class>> m(L.dim(), std::vector<mpq_class>(L.dim()));
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim(); ++j)
      for (const auto& [k, n] : L.bracket_basis(i, j)) m[k][j] += x[i] * n;
  }
  return m;
}

int height(const ChevalleyAlgebra& L, const Element& x) {
  check_element(L, x);
  if (is_zero(x)) return 0;
  const SparseRows m = integral_ad(L, x);
  Dense p = to_dense(m);
  int h = 0;
  while (!dense_zero(p)) {
    ++h;
    if (h > L.dim()) throw Error("element is not ad-nilpotent");
    p = multiply(m, p);
  }
  return h;
}

bool ad_power_vanishes(const ChevalleyAlgebra& L, const Element& x, int k) {
  check_element(L, x);
  if (k <= 0) return false;
  if (is_zero(x)) return true;
  const SparseRows m = integral_ad(L, x);
  Dense p = to_dense(m);
  for (int e = 1; e < k && !dense_zero(p); ++e) p = multiply(m, p);
  return dense_zero(p);
}

std::vector<int> ad_rank_sequence(const ChevalleyAlgebra& L, const Element& x) {
  check_element(L, x);
  std::vector<int> out;
  if (is_zero(x)) return out;
  const SparseRows m = integral_ad(L, x);
  Dense p = to_dense(m);
  while (!dense_zero(p)) {
    out.push_back(integer_rank(p));
    if (static_cast<int>(out.size()) > L.dim()) throw Error("element is not ad-nilpotent");
    p = multiply(m, p);
  }
  return out;
}

Element exp_root_action(const ChevalleyAlgebra& L, int a, const mpq_class& xi, const Element& x) {
  check_element(L, x);
  const Element ea = L.basis(L.e(a));
  Element result = x;
  Element term = x;
  for (int k = 1; k <= L.dim(); ++k) {
    term = bracket(L, ea, term);
    if (is_zero(term)) break;
    const mpq_class step = xi / mpq_class(k);
    for (auto& c : term) c *= step;
    for (int i = 0; i < L.dim(); ++i) result[i] += term[i];
  }
  return result;
}

int integer_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]);
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace fcsph
