#include "projlens/gfq.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace projlens::gf {

Fq::Fq(int q) : q_(q) {
  if (q < 2 || q >= 16) throw std::invalid_argument("Fq: q out of range");
  for (int i = 2; i * i <= q; ++i)
    if (q % i == 0) throw std::invalid_argument("Fq: q must be prime");
  for (int a = 0; a < q; ++a) {
    neg_[a] = static_cast<std::uint8_t>((q - a) % q);
    for (int b = 0; b < q; ++b) {
      add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
      mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
    }
  }
  inv_[1] = 1;
  for (int a = 2; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (a * b % q == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t Fq::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("Fq: inverse of zero");
  return inv_[a];
}

Mat Mat::zero(int r, int c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  return m;
}

Mat Mat::identity(int n) {
  Mat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (at(r, c) != o.at(r, c)) return false;
  return true;
}

int rref(const Fq& f, Mat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const std::uint8_t piv_inv = f.inv(m.at(rank, col));
    for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), piv_inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const std::uint8_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  for (int r = rank; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = 0;
  m.rows = rank;
  return rank;
}

Mat mat_mul(const Fq& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat out = Mat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::uint8_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
    }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out = Mat::zero(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

Mat right_kernel(const Fq& f, const Mat& m) {
  Mat w = m;
  rref(f, w);
  std::array<int, kMaxScratch> pivot_col{};
  std::array<bool, kMaxScratch> is_pivot{};
  is_pivot.fill(false);
  {
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c)
      if (w.at(r, c) != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        ++r;
      }
  }
  Mat out = Mat::zero(w.cols - w.rows, m.cols);
  int k = 0;
  for (int free = 0; free < w.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (int r = 0; r < w.rows; ++r)
      out.at(k, pivot_col[r]) = f.neg(w.at(r, free));
    ++k;
  }
  out.rows = k;
  return out;
}

std::uint8_t det(const Fq& f, Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square matrices only");
  std::uint8_t d = 1;
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    const std::uint8_t piv_inv = f.inv(m.at(col, col));
    for (int r = col + 1; r < m.rows; ++r) {
      const std::uint8_t factor = f.mul(m.at(r, col), piv_inv);
      if (factor == 0) continue;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
    }
  }
  return d;
}

Mat inverse(const Fq& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrices only");
  const int n = m.rows;
  Mat w = Mat::zero(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) w.at(r, c) = m.at(r, c);
    w.at(r, n + r) = 1;
  }
  if (rref(f, w) != n) throw std::domain_error("inverse: singular matrix");
  Mat out = Mat::zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = w.at(r, n + c);
  return out;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = static_cast<std::uint8_t>(ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = static_cast<std::uint8_t>(ambient);
  s.dim_ = s.ambient_;
  for (int i = 0; i < ambient; ++i) s.rows_[i * kMaxDim + i] = 1;
  return s;
}

Subspace Subspace::from_rows(const Fq& f, const Mat& rows) {
  Mat w = rows;
  const int rank = rref(f, w);
  Subspace s;
  s.ambient_ = static_cast<std::uint8_t>(rows.cols);
  s.dim_ = static_cast<std::uint8_t>(rank);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rows.cols; ++c) s.rows_[r * kMaxDim + c] = w.at(r, c);
  return s;
}

Mat Subspace::as_mat() const {
  Mat m = Mat::zero(dim_, ambient_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < ambient_; ++c) m.at(r, c) = entry(r, c);
  return m;
}

bool Subspace::contains_vector(const Fq& f, const std::uint8_t* v) const {
  std::array<std::uint8_t, kMaxDim> w{};
  std::memcpy(w.data(), v, ambient_);
  for (int r = 0; r < dim_; ++r) {
    int pc = -1;
    for (int c = 0; c < ambient_; ++c)
      if (entry(r, c) != 0) {
        pc = c;
        break;
      }
    const std::uint8_t factor = w[pc];
    if (factor == 0) continue;
    for (int c = pc; c < ambient_; ++c) w[c] = f.sub(w[c], f.mul(factor, entry(r, c)));
  }
  return std::all_of(w.begin(), w.begin() + ambient_, [](std::uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Fq& f, const Subspace& u) const {
  if (u.dim_ > dim_) return false;
  for (int r = 0; r < u.dim_; ++r)
    if (!contains_vector(f, u.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Fq& f, const Subspace& o) const {
  Mat m = Mat::zero(dim_ + o.dim_, ambient_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < ambient_; ++c) m.at(r, c) = entry(r, c);
  for (int r = 0; r < o.dim_; ++r)
    for (int c = 0; c < ambient_; ++c) m.at(dim_ + r, c) = o.entry(r, c);
  return from_rows(f, m);
}

Subspace Subspace::intersect(const Fq& f, const Subspace& o) const {
  // Zassenhaus: reduce [U|U; W|0]; rows with zero left half carry the
  // intersection in their right half.
  const int n = ambient_;
  Mat m = Mat::zero(dim_ + o.dim_, 2 * n);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = entry(r, c);
      m.at(r, n + c) = entry(r, c);
    }
  for (int r = 0; r < o.dim_; ++r)
    for (int c = 0; c < n; ++c) m.at(dim_ + r, c) = o.entry(r, c);
  rref(f, m);
  Mat inter = Mat::zero(m.rows, n);
  int k = 0;
  for (int r = 0; r < m.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c)
      if (m.at(r, c) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    for (int c = 0; c < n; ++c) inter.at(k, c) = m.at(r, n + c);
    ++k;
  }
  inter.rows = k;
  return from_rows(f, inter);
}

Subspace Subspace::apply(const Fq& f, const Mat& g) const {
  Mat img = mat_mul(f, as_mat(), transpose(g));
  return from_rows(f, img);
}

void Subspace::append_key(std::vector<std::uint8_t>& out) const {
  out.push_back(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < ambient_; ++c) out.push_back(entry(r, c));
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim_ == o.dim_ &&
         std::memcmp(rows_.data(), o.rows_.data(), sizeof(rows_)) == 0;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return std::memcmp(rows_.data(), o.rows_.data(), sizeof(rows_)) < 0;
}

std::vector<Subspace> subspaces_between(const Fq& f, const Subspace& base,
                                        const Subspace& within, int k) {
  std::vector<Subspace> out;
  const int b = base.dim(), w = within.dim();
  if (k < b || k > w) return out;
  if (k == b) {
    out.push_back(base);
    return out;
  }
  // Complement of base inside within: rows of `within` that stay
  // independent modulo base.
  Mat comp = Mat::zero(0, base.ambient());
  {
    Subspace acc = base;
    for (int r = 0; r < w && acc.dim() < w; ++r) {
      if (acc.contains_vector(f, within.row(r))) continue;
      for (int c = 0; c < base.ambient(); ++c) comp.at(comp.rows, c) = within.entry(r, c);
      ++comp.rows;
      comp.cols = base.ambient();
      Mat one = Mat::zero(1, base.ambient());
      for (int c = 0; c < base.ambient(); ++c) one.at(0, c) = within.entry(r, c);
      acc = acc.sum(f, Subspace::from_rows(f, one));
    }
  }
  const int qdim = w - b;       // quotient dimension
  const int sub = k - b;        // subspace dimension in the quotient
  // Enumerate reduced echelon sub x qdim matrices: choose pivot
  // columns, run an odometer over the free entries.
  std::vector<int> pivots(sub);
  for (int i = 0; i < sub; ++i) pivots[i] = i;
  const int q = f.q();
  for (;;) {
    // free positions: (r, c) with c > pivots[r], c not a pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < sub; ++r)
      for (int c = pivots[r] + 1; c < qdim; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          free_pos.emplace_back(r, c);
    std::vector<std::uint8_t> vals(free_pos.size(), 0);
    for (;;) {
      Mat qm = Mat::zero(sub, qdim);
      for (int r = 0; r < sub; ++r) qm.at(r, pivots[r]) = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        qm.at(free_pos[i].first, free_pos[i].second) = vals[i];
      // lift: rows of (qm * comp) joined with base
      Mat lift = Mat::zero(sub + b, base.ambient());
      Mat lifted = mat_mul(f, qm, comp);
      for (int r = 0; r < sub; ++r)
        for (int c = 0; c < base.ambient(); ++c) lift.at(r, c) = lifted.at(r, c);
      for (int r = 0; r < b; ++r)
        for (int c = 0; c < base.ambient(); ++c) lift.at(sub + r, c) = base.entry(r, c);
      out.push_back(Subspace::from_rows(f, lift));
      // odometer
      std::size_t i = 0;
      for (; i < vals.size(); ++i) {
        if (++vals[i] < q) break;
        vals[i] = 0;
      }
      if (i == vals.size()) break;
      if (vals.empty()) break;
    }
    // next pivot combination (lexicographic)
    int i = sub - 1;
    while (i >= 0 && pivots[i] == qdim - sub + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < sub; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace projlens::gf
