#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace projlens::gf {

constexpr int kMaxDim = 10;      // largest ambient vector dimension (D_5 -> 10)
constexpr int kMaxScratch = 24;  // working width for stacked eliminations

/// Arithmetic tables for a prime field F_q (q < 16).
class Fq {
 public:
  explicit Fq(int q);
  int q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;

 private:
  int q_;
  std::array<std::array<std::uint8_t, 16>, 16> add_{}, mul_{};
  std::array<std::uint8_t, 16> neg_{}, inv_{};
};

/// Dense matrix with a fixed stride; entries are field elements.
struct Mat {
  int rows = 0, cols = 0;
  std::array<std::uint8_t, kMaxScratch * kMaxScratch> a{};

  static Mat zero(int r, int c);
  static Mat identity(int n);

  std::uint8_t& at(int r, int c) { return a[r * kMaxScratch + c]; }
  std::uint8_t at(int r, int c) const { return a[r * kMaxScratch + c]; }

  bool operator==(const Mat& o) const;
};

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// compacted away (rows == rank afterwards).
int rref(const Fq& f, Mat& m);

Mat mat_mul(const Fq& f, const Mat& x, const Mat& y);
Mat transpose(const Mat& m);

/// Basis (as rows) of { x : m x^T = 0 }.
Mat right_kernel(const Fq& f, const Mat& m);

/// Determinant (Gaussian elimination).
std::uint8_t det(const Fq& f, Mat m);

/// Inverse; m must be square invertible.
Mat inverse(const Fq& f, const Mat& m);

/// Row space in canonical reduced echelon form. Canonical form makes
/// equality a byte compare and gives a total order for deterministic
/// enumeration.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace from_rows(const Fq& f, const Mat& rows);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  std::uint8_t entry(int r, int c) const { return rows_[r * kMaxDim + c]; }
  const std::uint8_t* row(int r) const { return &rows_[r * kMaxDim]; }
  Mat as_mat() const;

  bool contains_vector(const Fq& f, const std::uint8_t* v) const;
  bool contains(const Fq& f, const Subspace& u) const;

  Subspace sum(const Fq& f, const Subspace& o) const;
  Subspace intersect(const Fq& f, const Subspace& o) const;
  /// Row space of (rows * g^T): the image under the left action
  /// v -> v g^T, i.e. column-vector action g.
  Subspace apply(const Fq& f, const Mat& g) const;

  void append_key(std::vector<std::uint8_t>& out) const;

  bool operator==(const Subspace& o) const;
  bool operator<(const Subspace& o) const;

 private:
  std::uint8_t ambient_ = 0, dim_ = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> rows_{};
};

/// All k-dimensional subspaces of a space given by an echelon basis
/// `within` (the whole ambient when within is full), each containing
/// `base`; deterministic order. Enumerates quotient echelon forms and
/// lifts them.
std::vector<Subspace> subspaces_between(const Fq& f, const Subspace& base,
                                        const Subspace& within, int k);

}  // namespace projlens::gf
