#ifndef QRG_UNITGEOM_HPP_
#define QRG_UNITGEOM_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "qrg/covering.hpp"
#include "qrg/error.hpp"
#include "qrg/group.hpp"

namespace qrg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kProductTolerance = 1e-6;

//! An element of U_D(C). Construction checks ||A*A - I|| <= 1e-9.
class UnitaryPoint {
 public:
  explicit UnitaryPoint(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
      throw Error(ErrorKind::NotUnitary, "unitary matrix must be square and nonempty");
    const auto defect =
        (m_.adjoint() * m_ - CMatrix::Identity(m_.rows(), m_.cols())).norm();
    if (!(defect <= kUnitaryTolerance))
      throw Error(ErrorKind::NotUnitary, "||A*A - I|| = " + std::to_string(defect));
  }

  static UnitaryPoint identity(int dim) { return UnitaryPoint(CMatrix::Identity(dim, dim)); }
  static UnitaryPoint scalar(Complex z) {
    CMatrix m(1, 1);
    m(0, 0) = z;
    return UnitaryPoint(m);
  }
  //! diag(e^{i t_1}, ..., e^{i t_D})
  static UnitaryPoint phases(const std::vector<double>& angles) {
    CMatrix m = CMatrix::Zero(Eigen::Index(angles.size()), Eigen::Index(angles.size()));
    for (std::size_t k = 0; k < angles.size(); ++k) m(Eigen::Index(k), Eigen::Index(k)) = std::polar(1.0, angles[k]);
    return UnitaryPoint(m);
  }

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }

  // Products and inverses of unitaries are re-wrapped without a check;
  // accumulated rounding stays far below the tolerance for short words.
  UnitaryPoint operator*(const UnitaryPoint& o) const {
    if (dim() != o.dim()) throw Error(ErrorKind::MixedCarriers, "unitary dimensions differ");
    return UnitaryPoint(m_ * o.m_, Unchecked{});
  }
  UnitaryPoint inverse() const { return UnitaryPoint(m_.adjoint(), Unchecked{}); }
  UnitaryPoint pow(std::uint64_t k) const {
    CMatrix result = CMatrix::Identity(m_.rows(), m_.cols());
    CMatrix base = m_;
    while (k) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return UnitaryPoint(std::move(result), Unchecked{});
  }

 private:
  struct Unchecked {};
  UnitaryPoint(CMatrix m, Unchecked) : m_(std::move(m)) {}

  CMatrix m_;
};

//! Hilbert-Schmidt distance sqrt(Tr((A-B)*(A-B))).
inline double hs_distance(const UnitaryPoint& a, const UnitaryPoint& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::MixedCarriers, "unitary dimensions differ");
  return (a.matrix() - b.matrix()).norm();
}

//! l(A) = ||A - I||, entrywise.
inline double hs_length(const UnitaryPoint& a) {
  return (a.matrix() - CMatrix::Identity(a.dim(), a.dim())).norm();
}

//! Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
//! of diag(R) moved into Q.
inline UnitaryPoint haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const auto d = r(j, j);
    const auto mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : Complex(1.0);
  }
  return UnitaryPoint(q);
}

//! V diag(e^{i t_k}) V* with V Haar: a random unitary with prescribed
//! eigenvalue angles.
inline UnitaryPoint conjugated_phases(const std::vector<double>& angles, std::mt19937_64& rng) {
  auto v = haar_unitary(static_cast<int>(angles.size()), rng);
  return UnitaryPoint(v.matrix() * UnitaryPoint::phases(angles).matrix() * v.matrix().adjoint());
}

//! Eigenvalue angles with |t_k| log-uniform in [floor, ceiling], random signs.
inline UnitaryPoint near_identity_unitary(int dim, double angle_floor, double angle_ceiling,
                                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logmag(std::log(angle_floor), std::log(angle_ceiling));
  std::bernoulli_distribution sign(0.5);
  std::vector<double> angles(static_cast<std::size_t>(dim));
  for (auto& t : angles) {
    t = std::exp(logmag(rng));
    if (sign(rng)) t = -t;
  }
  return conjugated_phases(angles, rng);
}

struct PowerWitness {
  std::uint64_t k = 0;
  double length = 0;
};

//! Smallest k <= max_power with l(A^k) > sqrt 2. The scan uses the
//! eigenvalue angles (l(A^k)^2 = sum 2 - 2 cos(k t)); the returned length
//! comes from the actual matrix power.
inline std::optional<PowerWitness> power_length_witness(const UnitaryPoint& a,
                                                        std::uint64_t max_power) {
  if (hs_length(a) < kIdentityTolerance)
    throw Error(ErrorKind::IdentityInput, "no power of the identity leaves the ball");
  Eigen::ComplexEigenSolver<CMatrix> es(a.matrix(), false);
  std::vector<double> angles;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    angles.push_back(std::arg(es.eigenvalues()(i)));
  const double sqrt2 = std::numbers::sqrt2;
  for (std::uint64_t k = 1; k <= max_power; ++k) {
    double sq = 0;
    for (auto t : angles) sq += 2.0 - 2.0 * std::cos(double(k) * t);
    if (sq <= 2.0 - 1e-9) continue;
    const double len = hs_length(a.pow(k));
    if (len > sqrt2) return PowerWitness{k, len};
  }
  return std::nullopt;
}

enum class PackingMode { Exact, Empirical };

//! Exact: the least m such that any m points contain a pair at distance
//! < eps. Empirical: m is one more than the largest eps-separated set found.
struct PackingBound {
  int D = 1;
  double eps = 0;
  std::uint64_t m = 0;
  PackingMode mode = PackingMode::Exact;
  std::uint64_t separated_found = 0;  // empirical mode only
  std::uint64_t samples = 0;
};

//! 2 sin(pi / m): the minimal pairwise chord of m equally spaced points.
inline double circle_chord(std::uint64_t m) {
  return 2.0 * std::sin(std::numbers::pi / double(m));
}

namespace detail {

// chord(m) < eps, exact at the two rational chords (m = 2: 2, m = 6: 1);
// every other chord 2 sin(pi/m) is irrational.
inline bool chord_below(std::uint64_t m, double eps) {
  if (m == 2) return 2.0 < eps;
  if (m == 6) return 1.0 < eps;
  return circle_chord(m) < eps;
}

}  // namespace detail

//! D = 1: any m points on the circle have two within arc 2 pi / m, hence a
//! chord <= 2 sin(pi/m), and m equally spaced points attain it.
inline PackingBound packing_threshold(double eps) {
  if (!(eps > 0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  PackingBound b;
  b.D = 1;
  b.eps = eps;
  b.mode = PackingMode::Exact;
  if (eps > 2.0) {
    b.m = 2;
    return b;
  }
  // chord(m) ~ 2 pi / m, so start just below the estimate and walk.
  const double est = std::numbers::pi / std::asin(std::min(1.0, eps / 2.0));
  std::uint64_t m = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(est) > 3 ? static_cast<std::uint64_t>(est) - 2 : 2);
  while (m > 2 && detail::chord_below(m - 1, eps)) --m;
  while (!detail::chord_below(m, eps)) ++m;
  b.m = m;
  return b;
}

//! Greedy eps-separated subset of seeded Haar samples in U_D.
inline PackingBound packing_experiment(int dim, double eps, std::uint64_t samples,
                                       std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (!(eps > 0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  std::mt19937_64 rng(seed);
  std::vector<UnitaryPoint> kept;
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto u = haar_unitary(dim, rng);
    bool separated = true;
    for (const auto& k : kept)
      if (hs_distance(u, k) < eps) {
        separated = false;
        break;
      }
    if (separated) kept.push_back(std::move(u));
  }
  PackingBound b;
  b.D = dim;
  b.eps = eps;
  b.mode = PackingMode::Empirical;
  b.separated_found = kept.size();
  b.m = kept.size() + 1;
  b.samples = samples;
  return b;
}

//! Largest observed violation per axiom.
struct LengthAxiomsReport {
  int D = 0;
  std::uint64_t samples = 0;
  double symmetry = 0;        // |l(A) - l(A^-1)|
  double conjugation = 0;     // |l(BAB^-1) - l(A)|
  double triangle = 0;        // max(0, l(AB) - l(A) - l(B))
  double bi_invariance = 0;   // |d(AB, AC) - d(B, C)|, |d(BA, CA) - d(B, C)|
  double trace_identity = 0;  // |l(A)^2 - (2D - 2 Re Tr A)|

  double max_violation() const {
    return std::max({symmetry, conjugation, triangle, bi_invariance, trace_identity});
  }
  bool holds(double tol = kUnitaryTolerance) const { return max_violation() < tol; }
};

inline LengthAxiomsReport length_axioms_check(std::uint64_t samples, int dim,
                                              std::uint64_t seed) {
  if (dim < 1 || dim > 8) throw Error(ErrorKind::InvalidArgument, "dimension must be in 1..8");
  std::mt19937_64 rng(seed);
  LengthAxiomsReport rep;
  rep.D = dim;
  rep.samples = samples;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto a = haar_unitary(dim, rng);
    const auto b = haar_unitary(dim, rng);
    const auto c = haar_unitary(dim, rng);
    const double la = hs_length(a);
    const double lb = hs_length(b);
    rep.symmetry = std::max(rep.symmetry, std::abs(la - hs_length(a.inverse())));
    rep.conjugation = std::max(rep.conjugation, std::abs(hs_length(b * a * b.inverse()) - la));
    rep.triangle = std::max(rep.triangle, hs_length(a * b) - la - lb);
    const double dbc = hs_distance(b, c);
    rep.bi_invariance = std::max({rep.bi_invariance, std::abs(hs_distance(a * b, a * c) - dbc),
                                  std::abs(hs_distance(b * a, c * a) - dbc)});
    const double tr = a.matrix().trace().real();
    rep.trace_identity = std::max(rep.trace_identity, std::abs(la * la - (2.0 * dim - 2.0 * tr)));
  }
  return rep;
}

struct CoverLengthReport {
  bool covering_holds = false;  // precondition: (C(x)uC(x^-1))^K1 (C(y)uC(y^-1))^K2 = G
  bool bound_holds = false;
  double bound = 0;             // K1 l(rep(x)) + K2 l(rep(y))
  double max_length = 0;        // max over h of l(rep(h))
  double slack() const { return bound - max_length; }
};

using Representation = std::function<UnitaryPoint(Index)>;

//! Checks l(rep(h)) <= K1 l(rep(x)) + K2 l(rep(y)) + 1e-6 for all h. The
//! homomorphism property is checked on generators against every element.
inline CoverLengthReport coverlength_bound_check(const GroupTable& g, const Representation& rep,
                                                 Index x, Index y, unsigned K1, unsigned K2) {
  std::vector<UnitaryPoint> image;
  image.reserve(g.order());
  for (Index h = 0; h < g.order(); ++h) image.push_back(rep(h));
  for (auto s : g.generators())
    for (Index h = 0; h < g.order(); ++h) {
      const auto err = (image[s].matrix() * image[h].matrix() - image[g.mul(s, h)].matrix()).norm();
      if (!(err <= kProductTolerance))
        throw Error(ErrorKind::NotHomomorphism,
                    "rep(" + g.describe(s) + ") rep(" + g.describe(h) + ") differs by " +
                        std::to_string(err));
    }
  CoverLengthReport out;
  out.covering_holds = double_covering_feasible(g, x, y, K1, K2, 1, 1);
  out.bound = K1 * hs_length(image[x]) + K2 * hs_length(image[y]);
  for (const auto& u : image) out.max_length = std::max(out.max_length, hs_length(u));
  out.bound_holds = out.max_length <= out.bound + kProductTolerance;
  return out;
}

}  // namespace qrg

#endif  // QRG_UNITGEOM_HPP_
