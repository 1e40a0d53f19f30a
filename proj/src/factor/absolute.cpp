// Number of absolutely irreducible factors via Gao's partial-differential
// criterion: for squarefree F of bidegree (m, n) with gcd(F, F_X) = 1, the
// solutions (G, H) of
//
//     F*G_Y - G*F_Y = F*H_X - H*F_X,   deg G <= (m-1, n), deg H <= (m, n-1)
//
// form a space whose dimension is the number of irreducible factors of F over
// the algebraic closure. The dimension is computed as a kernel dimension over
// Q, which does not change under field extension.

#include <algorithm>

#include "liftscope/errors.hpp"
#include "liftscope/factor.hpp"

namespace liftscope {

namespace {

using Row = std::vector<Integer>;

// Rank of an integer matrix by fraction-free elimination; rows are kept
// primitive to curb growth.
std::size_t integer_rank(std::vector<Row> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Row& pr = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer a = pr[c], b = rows[i][c];
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      Integer content = 0;
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = rows[i][k] * a - pr[k] * b;
        content = gcd(content, rows[i][k]);
      }
      if (content > 1) {
        for (std::size_t k = c; k < cols; ++k) rows[i][k] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int absolute_factor_count(const BiPoly& f_in) {
  if (f_in.is_zero()) throw InputError("absolute_factor_count of zero");
  BiPoly f = canonical(f_in);
  int n = f.deg_y();
  int m = f.deg_x();
  if (m == 0 && n == 0) throw InputError("absolute_factor_count of a constant");
  // A squarefree polynomial in one variable splits into linear factors.
  if (m == 0) return n;
  if (n == 0) return m;

  BiPoly fx = f.derivative_x();
  BiPoly fy = f.derivative_y();

  std::vector<BiPoly> columns;
  for (int i = 0; i <= m - 1; ++i) {
    for (int j = 0; j <= n; ++j) {
      BiPoly mono = BiPoly::monomial(1, i, j);
      columns.push_back(f * mono.derivative_y() - mono * fy);
    }
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n - 1; ++j) {
      BiPoly mono = BiPoly::monomial(1, i, j);
      columns.push_back(mono * fx - f * mono.derivative_x());
    }
  }
  std::size_t rows_x = std::size_t(2 * m), rows_y = std::size_t(2 * n);
  std::vector<Row> rows(rows_x * rows_y, Row(columns.size(), Integer(0)));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& yc = columns[c].y_coeffs();
    for (std::size_t b = 0; b < yc.size(); ++b) {
      const auto& xc = yc[b].coeffs();
      for (std::size_t a = 0; a < xc.size(); ++a) {
        if (xc[a] == 0) continue;
        if (a >= rows_x || b >= rows_y || xc[a].get_den() != 1) {
          throw InconsistencyError("absolute_factor_count: unexpected monomial in linear system");
        }
        rows[a * rows_y + b][c] = xc[a].get_num();
      }
    }
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const Row& r) {
                              return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
                            }),
             rows.end());
  std::size_t rank = integer_rank(std::move(rows), columns.size());
  return int(columns.size() - rank);
}

}  // namespace liftscope
