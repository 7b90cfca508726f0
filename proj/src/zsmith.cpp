// SPDX-License-Identifier: Apache-2.0
#include "ractor/zsmith.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ractor::zsmith {

// ---------------------------------------------------------------------------
// Dense matrices

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void DenseIntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void DenseIntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  DenseIntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

Integer determinant(DenseIntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Sparse matrices

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& rows,
                                            std::size_t cols) {
  SparseIntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.rows_[r].emplace_back(static_cast<std::uint32_t>(c), Integer(rows[r][c]));
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseIntMatrix& d) {
  SparseIntMatrix m(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (sgn(d(r, c)) != 0) m.rows_[r].emplace_back(static_cast<std::uint32_t>(c), d(r, c));
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseIntMatrix::normalize(Row& entries) const {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Row merged;
  for (auto& [c, v] : entries) {
    if (c >= cols_) throw std::out_of_range("column index out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  entries = std::move(merged);
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("entry index out of range");
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (sgn(it->second) == 0) row.erase(it);
  } else if (sgn(v) != 0) {
    row.emplace(it, static_cast<std::uint32_t>(c), v);
  }
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Integer(0);
}

void SparseIntMatrix::set_row(std::size_t r, Row entries) {
  normalize(entries);
  rows_.at(r) = std::move(entries);
}

void SparseIntMatrix::append_row(Row entries) {
  normalize(entries);
  rows_.push_back(std::move(entries));
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return t;
}

DenseIntMatrix SparseIntMatrix::to_dense() const {
  DenseIntMatrix d(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) d(r, c) = v;
  return d;
}

void SparseIntMatrix::write_dump(std::ostream& out) const {
  out << rows() << ' ' << cols() << ' ' << nnz() << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) out << r << ' ' << c << ' ' << v << '\n';
}

SparseIntMatrix SparseIntMatrix::read_dump(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw std::runtime_error("malformed matrix dump header");
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(in >> r >> c >> v)) throw std::runtime_error("truncated matrix dump");
    m.add(r, c, Integer(v));
  }
  return m;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  SparseIntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseIntMatrix::Row acc;
    for (const auto& [k, x] : a.row(r))
      for (const auto& [c, y] : b.row(k)) acc.emplace_back(c, x * y);
    out.set_row(r, std::move(acc));
  }
  return out;
}

DenseIntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<Integer>& diag) {
  DenseIntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t n = end > begin ? end - begin : 0;
  if (threads <= 1 || n < 2 * threads) {
    body(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t lo = begin; lo < end; lo += chunk)
    pool.emplace_back(body, lo, std::min(end, lo + chunk));
  for (auto& t : pool) t.join();
}

// Nearest-integer quotient, keeping remainders small.
Integer round_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer twice = 2 * abs(r);
  if (twice > abs(b)) q += 1;
  return q;
}

struct DenseSnf {
  DenseIntMatrix& a;
  DenseIntMatrix* left;   // row operations
  DenseIntMatrix* right;  // column operations
  unsigned threads;

  // Smallest nonzero |entry| in the trailing block, ties by (row, col).
  bool find_pivot(std::size_t k, std::size_t& pr, std::size_t& pc) const {
    const Integer* best = nullptr;
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (sgn(x) == 0) continue;
        if (!best || mpz_cmpabs((x).get_mpz_t(), (*best).get_mpz_t()) < 0) {
          best = &x;
          pr = i;
          pc = j;
        }
      }
    return best != nullptr;
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (left) left->swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (right) right->swap_cols(x, y);
  }

  // row_i -= q * row_k for every i > k; returns true if column k is not yet clear.
  bool clear_column(std::size_t k) {
    std::vector<char> dirty(a.rows(), 0);
    parallel_for(k + 1, a.rows(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        if (sgn(a(i, k)) == 0) continue;
        Integer q = round_quotient(a(i, k), a(k, k));
        if (sgn(q) != 0) {
          for (std::size_t j = k; j < a.cols(); ++j)
            if (sgn(a(k, j)) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
          if (left)
            for (std::size_t j = 0; j < left->cols(); ++j)
              if (sgn((*left)(k, j)) != 0)
                mpz_submul((*left)(i, j).get_mpz_t(), q.get_mpz_t(), (*left)(k, j).get_mpz_t());
        }
        dirty[i] = sgn(a(i, k)) != 0;
      }
    });
    return std::find(dirty.begin(), dirty.end(), 1) != dirty.end();
  }

  // col_j -= q * col_k for every j > k; rows above k are already zero there.
  bool clear_row(std::size_t k) {
    bool dirty = false;
    for (std::size_t j = k + 1; j < a.cols(); ++j) {
      if (sgn(a(k, j)) == 0) continue;
      Integer q = round_quotient(a(k, j), a(k, k));
      if (sgn(q) != 0) {
        for (std::size_t i = k; i < a.rows(); ++i)
          if (sgn(a(i, k)) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
        if (right)
          for (std::size_t i = 0; i < right->rows(); ++i)
            if (sgn((*right)(i, k)) != 0)
              mpz_submul((*right)(i, j).get_mpz_t(), q.get_mpz_t(), (*right)(i, k).get_mpz_t());
      }
      dirty = dirty || sgn(a(k, j)) != 0;
    }
    return dirty;
  }

  void add_row(std::size_t target, std::size_t source) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(target, j) += a(source, j);
    if (left)
      for (std::size_t j = 0; j < left->cols(); ++j) (*left)(target, j) += (*left)(source, j);
  }

  std::vector<Integer> run() {
    std::vector<Integer> diag;
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < limit; ++k) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(k, pr, pc)) break;
      swap_rows(k, pr);
      swap_cols(k, pc);
      for (;;) {
        const bool col_dirty = clear_column(k);
        const bool row_dirty = clear_row(k);
        if (col_dirty || row_dirty) {
          // A remainder smaller than the pivot is left in row or column k.
          std::size_t best_i = k, best_j = k;
          for (std::size_t i = k + 1; i < a.rows(); ++i)
            if (sgn(a(i, k)) != 0 && mpz_cmpabs(a(i, k).get_mpz_t(), a(best_i, best_j).get_mpz_t()) < 0) {
              best_i = i;
              best_j = k;
            }
          for (std::size_t j = k + 1; j < a.cols(); ++j)
            if (sgn(a(k, j)) != 0 && mpz_cmpabs(a(k, j).get_mpz_t(), a(best_i, best_j).get_mpz_t()) < 0) {
              best_i = k;
              best_j = j;
            }
          swap_rows(k, best_i);
          swap_cols(k, best_j);
          continue;
        }
        std::size_t bad_row = 0;
        bool found = false;
        for (std::size_t i = k + 1; i < a.rows() && !found; ++i)
          for (std::size_t j = k + 1; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
              bad_row = i;
              found = true;
              break;
            }
        if (!found) break;
        add_row(k, bad_row);
      }
      if (sgn(a(k, k)) < 0) {
        a(k, k) = -a(k, k);
        if (left)
          for (std::size_t j = 0; j < left->cols(); ++j) (*left)(k, j) = -(*left)(k, j);
      }
      diag.push_back(a(k, k));
    }
    return diag;
  }
};

// Eliminates unit pivots on the sparse structure. Each elimination removes one
// row and one column and contributes an invariant factor 1. Pivots are taken in
// increasing Markowitz cost, ties broken by (row, col).
struct UnitEliminator {
  std::vector<SparseIntMatrix::Row> rows;
  std::vector<std::uint32_t> col_count;
  std::vector<std::vector<std::uint32_t>> col_rows;
  std::vector<char> row_alive;
  std::vector<char> col_alive;
  using Key = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  std::size_t units = 0;

  explicit UnitEliminator(const SparseIntMatrix& m)
      : col_count(m.cols(), 0), col_rows(m.cols()), row_alive(m.rows(), 0), col_alive(m.cols(), 1) {
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows.push_back(m.row(r));
      row_alive[r] = !rows[r].empty();
      for (const auto& [c, v] : rows[r]) {
        ++col_count[c];
        col_rows[c].push_back(static_cast<std::uint32_t>(r));
      }
    }
    for (std::uint32_t r = 0; r < rows.size(); ++r) push_units(r);
  }

  std::uint64_t cost(std::uint32_t r, std::uint32_t c) const {
    return static_cast<std::uint64_t>(rows[r].size() - 1) * (col_count[c] - 1);
  }

  void push_units(std::uint32_t r) {
    for (const auto& [c, v] : rows[r])
      if (mpz_cmpabs_ui((v).get_mpz_t(), 1) == 0) queue.emplace(cost(r, c), r, c);
  }

  static const Integer* find(const SparseIntMatrix::Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  // target += factor * source, keeping column bookkeeping exact.
  void axpy(std::uint32_t target, const Integer& factor, const SparseIntMatrix::Row& source) {
    auto& row = rows[target];
    SparseIntMatrix::Row out;
    out.reserve(row.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < source.size()) {
      if (j == source.size() || (i < row.size() && row[i].first < source[j].first)) {
        out.push_back(std::move(row[i++]));
      } else if (i == row.size() || source[j].first < row[i].first) {
        const std::uint32_t c = source[j].first;
        out.emplace_back(c, factor * source[j].second);
        ++col_count[c];
        col_rows[c].push_back(target);
        ++j;
      } else {
        Integer v = std::move(row[i].second);
        mpz_addmul(v.get_mpz_t(), factor.get_mpz_t(), source[j].second.get_mpz_t());
        if (sgn(v) != 0)
          out.emplace_back(row[i].first, std::move(v));
        else
          --col_count[row[i].first];
        ++i;
        ++j;
      }
    }
    row = std::move(out);
    if (row.empty()) row_alive[target] = 0;
  }

  void run() {
    while (!queue.empty()) {
      auto [key, r, c] = queue.top();
      queue.pop();
      if (!row_alive[r] || !col_alive[c]) continue;
      const Integer* pivot = find(rows[r], c);
      if (!pivot || mpz_cmpabs_ui((*pivot).get_mpz_t(), 1) != 0) continue;
      const std::uint64_t actual = cost(r, c);
      if (actual != key) {
        queue.emplace(actual, r, c);
        continue;
      }
      const Integer unit = *pivot;
      const SparseIntMatrix::Row pivot_row = rows[r];

      auto& touching = col_rows[c];
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      for (std::uint32_t i : touching) {
        if (i == r || !row_alive[i]) continue;
        const Integer* entry = find(rows[i], c);
        if (!entry) continue;
        const Integer factor = -(*entry) * unit;
        axpy(i, factor, pivot_row);
        if (row_alive[i]) push_units(i);
      }
      touching.clear();
      touching.shrink_to_fit();

      for (const auto& [col, v] : rows[r]) --col_count[col];
      rows[r].clear();
      row_alive[r] = 0;
      col_alive[c] = 0;
      ++units;
    }
  }
};

}  // namespace

SnfResult snf(const SparseIntMatrix& a, const SnfOptions& options) {
  SnfResult result;
  const unsigned threads = std::max(1u, options.threads);

  if (options.track_transforms) {
    DenseIntMatrix d = a.to_dense();
    DenseIntMatrix u = DenseIntMatrix::identity(a.rows());
    DenseIntMatrix v = DenseIntMatrix::identity(a.cols());
    DenseSnf engine{d, &u, &v, threads};
    result.diagonal = engine.run();
    result.left = std::move(u);
    result.right = std::move(v);
    result.core_rows = a.rows();
    result.core_cols = a.cols();
    return result;
  }

  UnitEliminator elim(a);
  elim.run();

  std::vector<std::uint32_t> core_rows, core_cols;
  std::vector<std::int64_t> col_index(a.cols(), -1);
  for (std::uint32_t r = 0; r < elim.rows.size(); ++r)
    if (elim.row_alive[r] && !elim.rows[r].empty()) core_rows.push_back(r);
  for (std::uint32_t c = 0; c < a.cols(); ++c)
    if (elim.col_alive[c] && elim.col_count[c] > 0) {
      col_index[c] = static_cast<std::int64_t>(core_cols.size());
      core_cols.push_back(c);
    }

  DenseIntMatrix core(core_rows.size(), core_cols.size());
  for (std::size_t i = 0; i < core_rows.size(); ++i)
    for (const auto& [c, v] : elim.rows[core_rows[i]]) {
      if (col_index[c] < 0) throw std::logic_error("residual entry in an eliminated column");
      core(i, static_cast<std::size_t>(col_index[c])) = v;
    }
  result.core_rows = core.rows();
  result.core_cols = core.cols();

  DenseSnf engine{core, nullptr, nullptr, threads};
  std::vector<Integer> core_diag = engine.run();
  result.diagonal.assign(elim.units, Integer(1));
  for (auto& d : core_diag) result.diagonal.push_back(std::move(d));
  return result;
}

// ---------------------------------------------------------------------------
// Torsion profiles

std::size_t TorsionProfile::two_rank() const {
  return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                [](const Integer& d) { return mpz_even_p(d.get_mpz_t()); }));
}

Integer TorsionProfile::torsion_order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string TorsionProfile::factors_string(char sep) const {
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += sep;
    s += invariant_factors[i].get_str();
  }
  return s;
}

std::string TorsionProfile::to_string() const {
  std::vector<std::string> parts;
  if (betti > 0) parts.push_back(betti == 1 ? "Z" : "Z^" + std::to_string(betti));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

TorsionProfile torsion_profile(const SparseIntMatrix& a, std::size_t ambient_rank,
                               const SnfOptions& options) {
  if (a.cols() != ambient_rank)
    throw std::invalid_argument("matrix column count differs from the ambient rank");
  SnfResult s = snf(a, options);
  TorsionProfile t;
  t.betti = ambient_rank - s.diagonal.size();
  for (auto& d : s.diagonal)
    if (d > 1) t.invariant_factors.push_back(std::move(d));
  return t;
}

std::size_t two_rank(const TorsionProfile& t) { return t.two_rank(); }

}  // namespace ractor::zsmith
