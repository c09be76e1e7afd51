#ifndef QRG_GFMAT_HPP_
#define QRG_GFMAT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qrg/detail/scanner.hpp"
#include "qrg/error.hpp"
#include "qrg/limits.hpp"
#include "qrg/number_theory.hpp"
#include "qrg/rational.hpp"

namespace qrg {

//! GF(p) for a prime 2 <= p <= 2^16.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > (1u << 16) || !is_prime(p))
      throw Error(ErrorKind::InvalidArgument,
                  std::to_string(p) + " is not a prime in [2, 65536]");
  }

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a ? p_ - a : 0; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error(ErrorKind::SingularMatrix, "inverse of zero");
    return static_cast<std::uint32_t>(inv_mod(a, p_));
  }
  std::uint32_t reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

//! Square matrix over GF(p), row-major.
class FFMatrix {
 public:
  FFMatrix(PrimeField field, std::uint32_t n)
      : field_(field), n_(n), entries_(std::size_t{n} * n, 0) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  }

  FFMatrix(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows)
      : FFMatrix(field, static_cast<std::uint32_t>(rows.size())) {
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (rows[i].size() != n_)
        throw Error(ErrorKind::InvalidArgument, "matrix must be square");
      for (std::uint32_t j = 0; j < n_; ++j)
        at(i, j) = field_.reduce(rows[i][j]);
    }
  }

  static FFMatrix identity(PrimeField field, std::uint32_t n) {
    FFMatrix m(field, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static FFMatrix diagonal(PrimeField field, const std::vector<std::int64_t>& d) {
    FFMatrix m(field, static_cast<std::uint32_t>(d.size()));
    for (std::uint32_t i = 0; i < d.size(); ++i) m.at(i, i) = field.reduce(d[i]);
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return entries_[i * n_ + j]; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
    a.check_compatible(b);
    FFMatrix r(a.field_, a.n_);
    const auto p = std::uint64_t{a.field_.p()};
    for (std::uint32_t i = 0; i < a.n_; ++i)
      for (std::uint32_t j = 0; j < a.n_; ++j) {
        std::uint64_t s = 0;
        for (std::uint32_t k = 0; k < a.n_; ++k) {
          s += std::uint64_t{a.at(i, k)} * b.at(k, j);
          if (s >= (std::uint64_t{1} << 62)) s %= p;
        }
        r.at(i, j) = static_cast<std::uint32_t>(s % p);
      }
    return r;
  }

  friend FFMatrix operator+(const FFMatrix& a, const FFMatrix& b) {
    a.check_compatible(b);
    FFMatrix r(a.field_, a.n_);
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
    return r;
  }

  friend FFMatrix operator-(const FFMatrix& a, const FFMatrix& b) {
    a.check_compatible(b);
    FFMatrix r(a.field_, a.n_);
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] = a.field_.sub(a.entries_[i], b.entries_[i]);
    return r;
  }

  FFMatrix scaled(std::uint32_t s) const {
    FFMatrix r(*this);
    for (auto& e : r.entries_) e = field_.mul(e, s % field_.p());
    return r;
  }

  FFMatrix transpose() const {
    FFMatrix r(field_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::uint32_t determinant() const {
    auto m = *this;
    std::uint32_t det = 1;
    for (std::uint32_t c = 0; c < n_; ++c) {
      std::uint32_t piv = c;
      while (piv < n_ && m.at(piv, c) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != c) {
        m.swap_rows(piv, c);
        det = field_.neg(det);
      }
      det = field_.mul(det, m.at(c, c));
      auto inv = field_.inv(m.at(c, c));
      for (std::uint32_t r = c + 1; r < n_; ++r) {
        if (m.at(r, c) == 0) continue;
        auto f = field_.mul(m.at(r, c), inv);
        for (std::uint32_t k = c; k < n_; ++k)
          m.at(r, k) = field_.sub(m.at(r, k), field_.mul(f, m.at(c, k)));
      }
    }
    return det;
  }

  bool is_invertible() const { return determinant() != 0; }

  FFMatrix inverse() const {
    auto m = *this;
    auto r = identity(field_, n_);
    for (std::uint32_t c = 0; c < n_; ++c) {
      std::uint32_t piv = c;
      while (piv < n_ && m.at(piv, c) == 0) ++piv;
      if (piv == n_) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
      m.swap_rows(piv, c);
      r.swap_rows(piv, c);
      auto inv = field_.inv(m.at(c, c));
      for (std::uint32_t k = 0; k < n_; ++k) {
        m.at(c, k) = field_.mul(m.at(c, k), inv);
        r.at(c, k) = field_.mul(r.at(c, k), inv);
      }
      for (std::uint32_t row = 0; row < n_; ++row) {
        if (row == c || m.at(row, c) == 0) continue;
        auto f = m.at(row, c);
        for (std::uint32_t k = 0; k < n_; ++k) {
          m.at(row, k) = field_.sub(m.at(row, k), field_.mul(f, m.at(c, k)));
          r.at(row, k) = field_.sub(r.at(row, k), field_.mul(f, r.at(c, k)));
        }
      }
    }
    return r;
  }

  bool operator==(const FFMatrix& o) const noexcept {
    return field_ == o.field_ && n_ == o.n_ && entries_ == o.entries_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = field_.p() * 31u + n_;
    for (auto v : entries_) h = h * 1000003u ^ v;
    return h;
  }

 private:
  void check_compatible(const FFMatrix& b) const {
    if (!(field_ == b.field_))
      throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (n_ != b.n_)
      throw Error(ErrorKind::MixedCarriers, "matrices of different dimension");
  }

  void swap_rows(std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    for (std::uint32_t k = 0; k < n_; ++k) std::swap(at(a, k), at(b, k));
  }

  PrimeField field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> entries_;
};

//! Row rank by elimination mod p.
inline std::uint32_t rank(const FFMatrix& m) {
  const auto& f = m.field();
  auto a = m;
  const auto n = a.n();
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < n && r < n; ++c) {
    std::uint32_t piv = r;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (std::uint32_t k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(r, k));
    auto inv = f.inv(a.at(r, c));
    for (std::uint32_t row = r + 1; row < n; ++row) {
      if (a.at(row, c) == 0) continue;
      auto factor = f.mul(a.at(row, c), inv);
      for (std::uint32_t k = c; k < n; ++k)
        a.at(row, k) = f.sub(a.at(row, k), f.mul(factor, a.at(r, k)));
    }
    ++r;
  }
  return r;
}

inline std::uint32_t kernel_dim(const FFMatrix& m) { return m.n() - rank(m); }

//! dim ker(a*I - g).
inline std::uint32_t eigenspace_dim(const FFMatrix& g, std::uint32_t a) {
  return kernel_dim(FFMatrix::identity(g.field(), g.n()).scaled(a) - g);
}

//! Largest eigenspace dimension over the nonzero scalars of the base field.
//! Scans every a in GF(p)^x; no eigenvalue shortcuts.
inline std::uint32_t max_eigenspace_dim(const FFMatrix& g) {
  std::uint32_t best = 0;
  for (std::uint32_t a = 1; a < g.field().p(); ++a)
    best = std::max(best, eigenspace_dim(g, a));
  return best;
}

//! Jordan length (n - m_g) / n with m_g = max over a != 0 of dim ker(a - g).
//! A conjugation-invariant pseudo-length on GL_n(p).
inline Rational jordan_length(const FFMatrix& g) {
  if (!g.is_invertible())
    throw Error(ErrorKind::SingularMatrix, "Jordan length needs an invertible matrix");
  auto m = max_eigenspace_dim(g);
  return Rational(static_cast<std::int64_t>(g.n()) - m, g.n());
}

inline FFMatrix direct_sum(const FFMatrix& a, const FFMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::FieldMismatch, "direct sum over different fields");
  FFMatrix r(a.field(), a.n() + b.n());
  for (std::uint32_t i = 0; i < a.n(); ++i)
    for (std::uint32_t j = 0; j < a.n(); ++j) r.at(i, j) = a.at(i, j);
  for (std::uint32_t i = 0; i < b.n(); ++i)
    for (std::uint32_t j = 0; j < b.n(); ++j)
      r.at(a.n() + i, a.n() + j) = b.at(i, j);
  return r;
}

//! Standard alternating form J = [[0, I], [-I, 0]] on the ordered basis
//! (v_1..v_h, w_1..w_h), dimension 2h.
inline FFMatrix symplectic_form(PrimeField field, std::uint32_t dim) {
  if (dim == 0 || dim % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "symplectic dimension must be even");
  const auto h = dim / 2;
  FFMatrix j(field, dim);
  for (std::uint32_t i = 0; i < h; ++i) {
    j.at(i, h + i) = 1;
    j.at(h + i, i) = field.neg(1);
  }
  return j;
}

inline bool preserves_form(const FFMatrix& m, const FFMatrix& form) {
  return m.transpose() * form * m == form;
}

enum class ClassicalFamily { SL, Sp };

namespace detail {

inline long double classical_order_estimate(ClassicalFamily fam, std::uint32_t n,
                                            std::uint32_t p) {
  long double q = p, order = 1;
  if (fam == ClassicalFamily::SL) {
    for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) order *= q;
    for (std::uint32_t i = 2; i <= n; ++i) {
      long double qi = 1;
      for (std::uint32_t k = 0; k < i; ++k) qi *= q;
      order *= qi - 1;
    }
  } else {
    auto h = n / 2;
    for (std::uint32_t i = 0; i < h * h; ++i) order *= q;
    for (std::uint32_t i = 1; i <= h; ++i) {
      long double qi = 1;
      for (std::uint32_t k = 0; k < 2 * i; ++k) qi *= q;
      order *= qi - 1;
    }
  }
  return order;
}

}  // namespace detail

//! |SL_n(p)| or |Sp_n(p)| from the order formulas.
inline std::uint64_t classical_order(ClassicalFamily fam, std::uint32_t n,
                                     std::uint32_t p) {
  auto est = detail::classical_order_estimate(fam, n, p);
  if (est > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(est + 0.5L);
}

//! Generators of SL_n(p) (elementary transvections I + E_ij) or Sp_n(p)
//! (one generator per root subgroup with respect to J = [[0,I],[-I,0]]).
inline std::vector<FFMatrix> classical_generators(ClassicalFamily fam,
                                                  std::uint32_t n,
                                                  PrimeField field,
                                                  std::size_t cap = kDefaultCaps.order) {
  if (fam == ClassicalFamily::SL && n < 2)
    throw Error(ErrorKind::UnsupportedFamily, "SL needs n >= 2");
  if (fam == ClassicalFamily::Sp && (n < 2 || n % 2 != 0))
    throw Error(ErrorKind::UnsupportedFamily, "Sp needs even n >= 2");
  if (classical_order(fam, n, field.p()) > cap)
    throw Error(ErrorKind::CapExceeded,
                "group order exceeds enumeration cap " + std::to_string(cap));

  std::vector<FFMatrix> gens;
  if (fam == ClassicalFamily::SL) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        auto t = FFMatrix::identity(field, n);
        t.at(i, j) = 1;
        gens.push_back(std::move(t));
      }
    return gens;
  }

  const auto h = n / 2;
  auto block = [&](std::uint32_t i, std::uint32_t j, bool upper) {
    auto m = FFMatrix::identity(field, n);
    if (upper) {
      m.at(i, h + j) = 1;
      m.at(j, h + i) = 1;
    } else {
      m.at(h + i, j) = 1;
      m.at(h + j, i) = 1;
    }
    return m;
  };
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = i; j < h; ++j) {
      gens.push_back(block(i, j, true));
      gens.push_back(block(i, j, false));
    }
  // Levi part diag(A, A^{-T}) with A = I + E_ij.
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) {
      if (i == j) continue;
      auto m = FFMatrix::identity(field, n);
      m.at(i, j) = 1;
      m.at(h + j, h + i) = field.neg(1);
      gens.push_back(std::move(m));
    }
  return gens;
}

//! "mat:p=<prime>:[[r,..],[..]]"
inline std::string to_string(const FFMatrix& m) {
  std::string s = "mat:p=" + std::to_string(m.field().p()) + ":[";
  for (std::uint32_t i = 0; i < m.n(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::uint32_t j = 0; j < m.n(); ++j) {
      if (j) s += ',';
      s += std::to_string(m.at(i, j));
    }
    s += ']';
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const FFMatrix& m) {
  return os << to_string(m);
}

inline FFMatrix parse_matrix(std::string_view text) {
  detail::Scanner sc(text);
  sc.skip_ws();
  sc.expect("mat:p=");
  std::size_t at = sc.offset();
  auto p = sc.number();
  if (p > (1u << 16) || !is_prime(p)) throw ParseError(at, "prime <= 65536", "bad modulus");
  PrimeField field(static_cast<std::uint32_t>(p));
  sc.expect(':');
  sc.expect('[');
  std::vector<std::vector<std::int64_t>> rows;
  do {
    sc.skip_ws();
    sc.expect('[');
    std::vector<std::int64_t> row;
    do {
      sc.skip_ws();
      bool neg = sc.accept('-');
      auto v = static_cast<std::int64_t>(sc.number());
      row.push_back(neg ? -v : v);
      sc.skip_ws();
    } while (sc.accept(','));
    sc.expect(']');
    rows.push_back(std::move(row));
    sc.skip_ws();
  } while (sc.accept(','));
  sc.expect(']');
  sc.skip_ws();
  sc.expect_end();
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError(0, "square matrix", "ragged rows");
  return FFMatrix(field, rows);
}

}  // namespace qrg

template <>
struct std::hash<qrg::FFMatrix> {
  std::size_t operator()(const qrg::FFMatrix& m) const noexcept { return m.hash(); }
};

#endif  // QRG_GFMAT_HPP_
