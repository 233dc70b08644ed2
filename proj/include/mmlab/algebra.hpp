#ifndef MMLAB_ALGEBRA_HPP
#define MMLAB_ALGEBRA_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mmlab/error.hpp"

namespace mmlab {

enum class Field : std::uint8_t { GF2 = 2, GF4 = 4 };

inline int field_order(Field f) { return static_cast<int>(f); }

// GF(4) = {0, 1, a, b} encoded as 0, 1, 2, 3. Bit 0 is the coefficient of 1 and
// bit 1 the coefficient of a, so addition is XOR and a+1 = b falls out for free.
namespace gf4 {

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

constexpr std::uint8_t add(std::uint8_t x, std::uint8_t y) { return x ^ y; }
constexpr std::uint8_t mul(std::uint8_t x, std::uint8_t y) { return kMul[x][y]; }
// conjugation x -> x^2; swaps a and b
constexpr std::uint8_t conj(std::uint8_t x) { return x < 2 ? x : static_cast<std::uint8_t>(x ^ 1); }
// multiplicative inverse; happens to coincide with conjugation on GF(4)^*
constexpr std::uint8_t recip(std::uint8_t x) { return conj(x); }

}  // namespace gf4

/// A single field element tagged with its field.
class FieldScalar {
 public:
  constexpr FieldScalar() = default;
  constexpr FieldScalar(Field f, std::uint8_t code) : field_(f), code_(code) {}

  static FieldScalar zero(Field f) { return {f, 0}; }
  static FieldScalar one(Field f) { return {f, 1}; }

  static FieldScalar parse(Field f, std::string_view sym) {
    std::uint8_t code = 0;
    if (sym == "0") code = 0;
    else if (sym == "1") code = 1;
    else if (sym == "a" && f == Field::GF4) code = 2;
    else if (sym == "b" && f == Field::GF4) code = 3;
    else fail(ErrorCode::ParseError, "bad field symbol '" + std::string(sym) + "' for GF(" +
                                         std::to_string(field_order(f)) + ")");
    return {f, code};
  }

  constexpr Field field() const { return field_; }
  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  char symbol() const { return "01ab"[code_]; }

  friend constexpr bool operator==(FieldScalar, FieldScalar) = default;

 private:
  Field field_ = Field::GF2;
  std::uint8_t code_ = 0;
};

inline void require_same_field(const FieldScalar& x, const FieldScalar& y) {
  require(x.field() == y.field(), ErrorCode::FieldMismatch, "operands live in different fields");
}

inline FieldScalar operator+(FieldScalar x, FieldScalar y) {
  require_same_field(x, y);
  return {x.field(), gf4::add(x.code(), y.code())};
}

inline FieldScalar operator*(FieldScalar x, FieldScalar y) {
  require_same_field(x, y);
  return {x.field(), gf4::mul(x.code(), y.code())};
}

/// The non-trivial automorphism of GF(4); the identity on GF(2).
inline FieldScalar inv_automorphism(FieldScalar x) { return {x.field(), gf4::conj(x.code())}; }

enum class FieldOp { Add, Mul, InvAutomorphism };

inline FieldScalar field_arith(FieldOp op, FieldScalar x, FieldScalar y = {}) {
  switch (op) {
    case FieldOp::Add: return x + y;
    case FieldOp::Mul: return x * y;
    case FieldOp::InvAutomorphism: return inv_automorphism(x);
  }
  fail(ErrorCode::InvalidArgument, "unknown field operation");
}

/// A column of at most 64 rows packed into two bit planes.
struct PackedColumn {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool is_zero() const { return (lo | hi) == 0; }
  std::uint8_t entry(int r) const {
    return static_cast<std::uint8_t>(((lo >> r) & 1U) | (((hi >> r) & 1U) << 1));
  }
  PackedColumn scaled(std::uint8_t c) const {
    switch (c) {
      case 0: return {};
      case 1: return *this;
      case 2: return {hi, lo ^ hi};
      default: return {lo ^ hi, lo};
    }
  }
  PackedColumn& operator^=(const PackedColumn& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend bool operator==(const PackedColumn&, const PackedColumn&) = default;
};

/// Incremental span of packed columns, keyed by pivot row. Works for both
/// fields since GF(2) columns simply never set the hi plane.
class PackedSpan {
 public:
  int rank() const { return rank_; }

  /// Adds v; returns false if v was already in the span.
  bool insert(PackedColumn v) {
    reduce(v);
    if (v.is_zero()) return false;
    const int p = pivot_of(v);
    basis_[p] = v.scaled(gf4::recip(v.entry(p)));
    present_ |= std::uint64_t{1} << p;
    ++rank_;
    return true;
  }

  bool contains(PackedColumn v) const {
    reduce(v);
    return v.is_zero();
  }

 private:
  static int pivot_of(const PackedColumn& v) { return 63 - std::countl_zero(v.lo | v.hi); }

  void reduce(PackedColumn& v) const {
    while (!v.is_zero()) {
      const int p = pivot_of(v);
      if (((present_ >> p) & 1U) == 0) return;
      v ^= basis_[p].scaled(v.entry(p));
    }
  }

  std::array<PackedColumn, 64> basis_{};
  std::uint64_t present_ = 0;
  int rank_ = 0;
};

/// Dense matrix over GF(2) or GF(4). Each row is stored as bit planes of
/// 64-bit words: plane lo holds the 1-coefficients, plane hi the a-coefficients.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), words_((cols + 63) / 64),
        lo_(static_cast<std::size_t>(rows) * words_, 0), hi_(static_cast<std::size_t>(rows) * words_, 0) {
    require(rows >= 0 && cols >= 0, ErrorCode::InvalidArgument, "negative matrix dimension");
  }

  static FieldMatrix identity(Field f, int n) {
    FieldMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set_code(i, i, 1);
    return m;
  }

  /// Builds from symbol codes 0..3 (a = 2, b = 3).
  static FieldMatrix from_codes(Field f, const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    FieldMatrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
      require(static_cast<int>(rows[i].size()) == c, ErrorCode::InvalidArgument, "ragged matrix rows");
      for (int j = 0; j < c; ++j) {
        const int v = rows[i][j];
        require(v >= 0 && v < field_order(f), ErrorCode::InvalidArgument, "entry outside field");
        m.set_code(i, j, static_cast<std::uint8_t>(v));
      }
    }
    return m;
  }

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t code(int r, int c) const {
    const std::size_t w = idx(r, c / 64);
    const int b = c % 64;
    return static_cast<std::uint8_t>(((lo_[w] >> b) & 1U) | (((hi_[w] >> b) & 1U) << 1));
  }
  FieldScalar at(int r, int c) const { return {field_, code(r, c)}; }

  void set_code(int r, int c, std::uint8_t v) {
    require(v < field_order(field_), ErrorCode::FieldMismatch, "entry outside matrix field");
    const std::size_t w = idx(r, c / 64);
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    lo_[w] = (v & 1U) ? (lo_[w] | bit) : (lo_[w] & ~bit);
    hi_[w] = (v & 2U) ? (hi_[w] | bit) : (hi_[w] & ~bit);
  }
  void set(int r, int c, FieldScalar v) {
    require(v.field() == field_, ErrorCode::FieldMismatch, "scalar field differs from matrix field");
    set_code(r, c, v.code());
  }

  bool is_zero() const {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if ((lo_[i] | hi_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  /// Same entries read over GF(4). GF(2) embeds as the prime subfield.
  FieldMatrix lifted(Field target) const {
    if (target == field_) return *this;
    require(target == Field::GF4, ErrorCode::FieldMismatch, "cannot push a GF(4) matrix down to GF(2)");
    FieldMatrix m = *this;
    m.field_ = Field::GF4;
    return m;
  }

  /// GF(2) view if every entry lies in {0,1}.
  bool entries_binary() const {
    for (auto w : hi_)
      if (w != 0) return false;
    return true;
  }
  FieldMatrix as_binary() const {
    require(entries_binary(), ErrorCode::NotBinary, "matrix has entries a or b");
    FieldMatrix m = *this;
    m.field_ = Field::GF2;
    return m;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (auto v = code(i, j)) t.set_code(j, i, v);
    return t;
  }

  /// Entry-wise conjugation; identity over GF(2).
  FieldMatrix conjugate() const {
    FieldMatrix m = *this;
    // conj swaps a and b: on planes (lo, hi) this is lo ^= hi
    for (std::size_t i = 0; i < m.lo_.size(); ++i) m.lo_[i] ^= m.hi_[i];
    return m;
  }

  FieldMatrix select_columns(const std::vector<int>& cols) const {
    FieldMatrix m(field_, rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (auto v = code(i, cols[j])) m.set_code(i, static_cast<int>(j), v);
    return m;
  }

  FieldMatrix select_rows(const std::vector<int>& rows) const {
    FieldMatrix m(field_, static_cast<int>(rows.size()), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int w = 0; w < words_; ++w) {
        m.lo_[m.idx(static_cast<int>(i), w)] = lo_[idx(rows[i], w)];
        m.hi_[m.idx(static_cast<int>(i), w)] = hi_[idx(rows[i], w)];
      }
    return m;
  }

  static FieldMatrix hconcat(const std::vector<FieldMatrix>& blocks) {
    require(!blocks.empty(), ErrorCode::InvalidArgument, "hconcat of nothing");
    Field f = Field::GF2;
    for (const auto& b : blocks)
      if (b.field() == Field::GF4) f = Field::GF4;
    int cols = 0;
    for (const auto& b : blocks) {
      require(b.rows() == blocks[0].rows(), ErrorCode::InvalidArgument, "hconcat row mismatch");
      cols += b.cols();
    }
    FieldMatrix m(f, blocks[0].rows(), cols);
    int off = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
          if (auto v = b.code(i, j)) m.set_code(i, off + j, v);
      off += b.cols();
    }
    return m;
  }

  static FieldMatrix block_diagonal(const FieldMatrix& a, const FieldMatrix& b) {
    const Field f = (a.field() == Field::GF4 || b.field() == Field::GF4) ? Field::GF4 : Field::GF2;
    FieldMatrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (auto v = a.code(i, j)) m.set_code(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (auto v = b.code(i, j)) m.set_code(a.rows() + i, a.cols() + j, v);
    return m;
  }

  FieldMatrix operator+(const FieldMatrix& o) const {
    require(field_ == o.field_, ErrorCode::FieldMismatch, "matrix sum across fields");
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::InvalidArgument, "matrix sum shape mismatch");
    FieldMatrix m = *this;
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      m.lo_[i] ^= o.lo_[i];
      m.hi_[i] ^= o.hi_[i];
    }
    return m;
  }

  FieldMatrix operator*(const FieldMatrix& o) const {
    require(field_ == o.field_, ErrorCode::FieldMismatch, "matrix product across fields");
    require(cols_ == o.rows_, ErrorCode::InvalidArgument, "matrix product shape mismatch");
    FieldMatrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k)
        if (auto c = code(i, k)) m.add_scaled_row_from(i, o, k, c);
    return m;
  }

  struct Echelon;

  Echelon rref() const;

  int rank() const;
  int nullity() const { return cols_ - rank(); }

  /// Canonical right-kernel basis: one vector per free column (ascending),
  /// with a 1 in that column and zeros in every other free column.
  std::vector<std::vector<FieldScalar>> null_space() const;

  /// Column j as a packed vector; requires rows <= 64.
  PackedColumn packed_column(int j) const {
    require(rows_ <= 64, ErrorCode::TooLarge, "packed columns need at most 64 rows");
    PackedColumn c;
    for (int i = 0; i < rows_; ++i) {
      const std::uint8_t v = code(i, j);
      c.lo |= static_cast<std::uint64_t>(v & 1U) << i;
      c.hi |= static_cast<std::uint64_t>((v >> 1) & 1U) << i;
    }
    return c;
  }

  /// Same column matroid, with at most `cols` rows (zero rows of the echelon form dropped).
  FieldMatrix row_reduced() const;

  std::string to_gfmat() const {
    std::ostringstream out;
    out << "field " << field_order(field_) << "\n" << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << "01ab"[code(i, j)];
      out << "\n";
    }
    return out.str();
  }

  static FieldMatrix parse_gfmat(std::istream& in) {
    std::string word;
    int f = 0;
    if (!(in >> word) || word != "field" || !(in >> f) || (f != 2 && f != 4))
      fail(ErrorCode::ParseError, "gfmat: expected 'field 2' or 'field 4'");
    int r = -1, c = -1;
    if (!(in >> r >> c) || r < 0 || c < 0) fail(ErrorCode::ParseError, "gfmat: expected '<rows> <cols>'");
    const Field field = f == 2 ? Field::GF2 : Field::GF4;
    FieldMatrix m(field, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (!(in >> word)) fail(ErrorCode::ParseError, "gfmat: truncated matrix body");
        m.set_code(i, j, FieldScalar::parse(field, word).code());
      }
    if (in >> word) fail(ErrorCode::ParseError, "gfmat: trailing content '" + word + "'");
    return m;
  }

  static FieldMatrix parse_gfmat(const std::string& text) {
    std::istringstream in(text);
    return parse_gfmat(in);
  }

  // Elementary row operations (public so callers can run metamorphic checks).
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int w = 0; w < words_; ++w) {
      std::swap(lo_[idx(a, w)], lo_[idx(b, w)]);
      std::swap(hi_[idx(a, w)], hi_[idx(b, w)]);
    }
  }
  void scale_row(int r, std::uint8_t c) {
    require(c != 0, ErrorCode::InvalidArgument, "scaling a row by zero");
    for (int w = 0; w < words_; ++w) scale_word(lo_[idx(r, w)], hi_[idx(r, w)], c);
  }
  /// row dst += c * row src
  void add_scaled_row(int dst, int src, std::uint8_t c) {
    for (int w = 0; w < words_; ++w) {
      std::uint64_t l = lo_[idx(src, w)], h = hi_[idx(src, w)];
      scale_word(l, h, c);
      lo_[idx(dst, w)] ^= l;
      hi_[idx(dst, w)] ^= h;
    }
  }

 private:
  std::size_t idx(int r, int w) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(words_) + static_cast<std::size_t>(w); }

  static void scale_word(std::uint64_t& lo, std::uint64_t& hi, std::uint8_t c) {
    const std::uint64_t l = lo, h = hi;
    switch (c) {
      case 0: lo = hi = 0; break;
      case 1: break;
      case 2: lo = h; hi = l ^ h; break;
      default: lo = l ^ h; hi = l; break;
    }
  }

  void add_scaled_row_from(int dst, const FieldMatrix& o, int src, std::uint8_t c) {
    for (int w = 0; w < words_; ++w) {
      std::uint64_t l = o.lo_[o.idx(src, w)], h = o.hi_[o.idx(src, w)];
      scale_word(l, h, c);
      lo_[idx(dst, w)] ^= l;
      hi_[idx(dst, w)] ^= h;
    }
  }

  Field field_ = Field::GF2;
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
};

struct FieldMatrix::Echelon {
  FieldMatrix reduced;      // reduced row echelon form, zero rows last
  std::vector<int> pivots;  // pivot column of row i, ascending
};

/// Reduced row echelon form; pivots are the lexicographically least column basis.
inline FieldMatrix::Echelon FieldMatrix::rref() const {
  FieldMatrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (m.code(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(p, r);
    m.scale_row(r, gf4::recip(m.code(r, c)));
    for (int i = 0; i < rows_; ++i)
      if (i != r)
        if (auto v = m.code(i, c)) m.add_scaled_row(i, r, v);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline int FieldMatrix::rank() const { return static_cast<int>(rref().pivots.size()); }

inline std::vector<std::vector<FieldScalar>> FieldMatrix::null_space() const {
  const Echelon e = rref();
  std::vector<char> is_pivot(static_cast<std::size_t>(cols_), 0);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<FieldScalar>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<FieldScalar> v(static_cast<std::size_t>(cols_), FieldScalar::zero(field_));
    v[static_cast<std::size_t>(f)] = FieldScalar::one(field_);
    // characteristic 2: -R[i][f] = R[i][f]
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[static_cast<std::size_t>(e.pivots[i])] = e.reduced.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline FieldMatrix FieldMatrix::row_reduced() const {
  Echelon e = rref();
  std::vector<int> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  return e.reduced.select_rows(keep);
}

/// inv(M^T): the matrix that inv-symmetry compares against.
inline FieldMatrix inv_transpose(const FieldMatrix& m) { return m.transpose().conjugate(); }

/// Rank of the column subset `cols` of a matrix with at most 64 rows.
inline int packed_rank(const std::vector<PackedColumn>& columns, std::uint64_t subset) {
  PackedSpan span;
  for (std::uint64_t b = subset; b != 0; b &= b - 1) span.insert(columns[static_cast<std::size_t>(std::countr_zero(b))]);
  return span.rank();
}

}  // namespace mmlab

#endif  // MMLAB_ALGEBRA_HPP
