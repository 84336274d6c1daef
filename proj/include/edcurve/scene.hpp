// World curves, cameras and camera arrangements.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edcurve/exactnum.hpp"
#include "edcurve/linalg.hpp"

namespace edcurve {

// ---------------------------------------------------------------------------
// Randomness

/// SplitMix64 finalizer. Used to derive independent per-cell / per-camera
/// seeds from one user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

/// Deterministic stream: std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, with integer draws by rejection sampling (the standard
/// distributions are implementation-defined, so they are not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// a/b with a uniform in [-num_bound, num_bound], b uniform in [1, den_max].
  Rat uniform_rat(std::int64_t num_bound, std::int64_t den_max) {
    const auto a = uniform_int(-num_bound, num_bound);
    const auto b = uniform_int(1, den_max);
    Rat r(static_cast<long>(a), static_cast<unsigned long>(b));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// RationalCurve

/// f : P^1 -> P^N, [s:t] -> [f_0 : ... : f_N], all f_i binary forms of degree
/// e without a common factor.
class RationalCurve {
 public:
  explicit RationalCurve(std::vector<HomPoly2> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("a curve needs at least two coordinates");
    const int e = coords_[0].degree();
    for (const auto& c : coords_) {
      if (c.degree() != e) throw std::invalid_argument("curve coordinates must share one degree");
    }
    if (e < 1) throw std::invalid_argument("curve degree must be at least 1");
    if (std::all_of(coords_.begin(), coords_.end(), [](const HomPoly2& c) { return c.is_zero(); })) {
      throw std::invalid_argument("all curve coordinates vanish");
    }
    if (hom_gcd(coords_).degree() > 0) throw std::invalid_argument("curve has a base point (coordinates share a factor)");
  }

  int N() const { return static_cast<int>(coords_.size()) - 1; }
  int degree() const { return coords_[0].degree(); }
  const std::vector<HomPoly2>& coords() const { return coords_; }

  std::vector<Rat> operator()(const Rat& s, const Rat& t) const {
    std::vector<Rat> x;
    x.reserve(coords_.size());
    for (const auto& c : coords_) x.push_back(c(s, t));
    return x;
  }

 private:
  std::vector<HomPoly2> coords_;
};

/// [t^e : s t^(e-1) : ... : s^e]; only N = e is accepted.
inline RationalCurve rational_normal_curve(int e, int N) {
  if (e < 1) throw std::invalid_argument("rational normal curve needs e >= 1");
  if (N != e) throw std::invalid_argument("rational normal curve needs N = e; pad coordinates explicitly instead");
  std::vector<HomPoly2> coords;
  for (int k = 0; k <= e; ++k) coords.push_back(HomPoly2::monomial(1, k, e - k));
  return RationalCurve(std::move(coords));
}

/// Curve of degree e in P^N with integer coefficients drawn from
/// [-bound, bound]; redraws (at most 1000 times) until base-point free.
inline RationalCurve random_curve(std::uint64_t seed, int e, int N, std::int64_t bound = 10) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<HomPoly2> coords;
    for (int i = 0; i <= N; ++i) {
      std::vector<Rat> c(static_cast<std::size_t>(e) + 1);
      for (auto& x : c) x = Rat(static_cast<long>(rng.uniform_int(-bound, bound)));
      coords.emplace_back(std::move(c));
    }
    try {
      return RationalCurve(std::move(coords));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::overflow_error("random_curve: no base-point-free curve after 1000 draws");
}

// ---------------------------------------------------------------------------
// Cameras

/// Full-rank (h+1) x (N+1) matrix.
class Camera {
 public:
  explicit Camera(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() < 1 || m_.cols() < 1) throw std::invalid_argument("empty camera matrix");
    if (m_.rows() > m_.cols()) throw std::invalid_argument("camera has more rows than columns");
    if (rank(m_) != m_.rows()) throw std::invalid_argument("camera matrix is not of full rank");
  }
  explicit Camera(const std::vector<std::vector<Rat>>& rows) : Camera(RatMatrix(rows)) {}

  int h() const { return m_.rows() - 1; }
  int N() const { return m_.cols() - 1; }
  const RatMatrix& matrix() const { return m_; }
  std::vector<Rat> row(int j) const { return m_.row(j); }

  friend bool operator==(const Camera& a, const Camera& b) { return a.m_ == b.m_; }

 private:
  RatMatrix m_;
};

class Arrangement {
 public:
  explicit Arrangement(std::vector<Camera> cams) : cams_(std::move(cams)) {
    if (cams_.empty()) throw std::invalid_argument("an arrangement needs at least one camera");
    for (const auto& c : cams_) {
      if (c.h() != cams_[0].h() || c.N() != cams_[0].N()) {
        throw std::invalid_argument("cameras in an arrangement must share dimensions");
      }
    }
  }

  int n() const { return static_cast<int>(cams_.size()); }
  int h() const { return cams_[0].h(); }
  int N() const { return cams_[0].N(); }
  const std::vector<Camera>& cameras() const { return cams_; }
  const Camera& operator[](int i) const { return cams_.at(static_cast<std::size_t>(i)); }

 private:
  std::vector<Camera> cams_;
};

/// Entry j is C^(j) . f, a binary form of degree e.
inline std::vector<HomPoly2> apply_camera(const Camera& cam, const RationalCurve& f) {
  if (cam.N() != f.N()) throw std::invalid_argument("camera and curve live in different ambient spaces");
  std::vector<HomPoly2> out;
  out.reserve(static_cast<std::size_t>(cam.h()) + 1);
  for (int j = 0; j <= cam.h(); ++j) {
    HomPoly2 acc(f.degree());
    for (int k = 0; k <= f.N(); ++k) {
      const Rat& c = cam.matrix()(j, k);
      if (c != 0) acc += c * f.coords()[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Which entries of a random camera may be nonzero; entries outside the
/// support are forced to 0.
using CameraSupport = std::function<bool(int row, int col)>;

/// Camera with entries uniform in [-bound, bound] (on the support), redrawn
/// until of full rank. Gives up with std::overflow_error after 1000 draws.
inline Camera random_camera(std::uint64_t seed, int h, int N, std::int64_t bound = 10,
                            const CameraSupport& support = {}) {
  if (bound < 2) throw std::invalid_argument("camera entry bound must be at least 2");
  if (h < 0 || N < h) throw std::invalid_argument("camera needs 0 <= h <= N");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatMatrix m(h + 1, N + 1);
    for (int i = 0; i <= h; ++i)
      for (int j = 0; j <= N; ++j) {
        const auto v = rng.uniform_int(-bound, bound);
        if (!support || support(i, j)) m(i, j) = Rat(static_cast<long>(v));
      }
    if (rank(m) == h + 1) return Camera(std::move(m));
  }
  throw std::overflow_error("random_camera: no full-rank draw after 1000 tries");
}

/// n cameras with seeds derived from one arrangement seed.
inline Arrangement random_arrangement(std::uint64_t seed, int n, int h, int N, std::int64_t bound = 10,
                                      const CameraSupport& support = {}) {
  std::vector<Camera> cams;
  for (int i = 0; i < n; ++i) cams.push_back(random_camera(derive_seed(seed, static_cast<std::uint64_t>(i)), h, N, bound, support));
  return Arrangement(std::move(cams));
}

/// 3x4 cameras with c_{1,1} = 0 (top-left entry).
inline CameraSupport zero_corner_support() {
  return [](int row, int col) { return !(row == 0 && col == 0); };
}

/// 3x6 cameras of block shape [c1 c2 0 0 0 0; 0 0 c3 c4 0 0; 0 0 0 0 c5 c6].
inline CameraSupport block_support() {
  return [](int row, int col) { return col / 2 == row; };
}

// ---------------------------------------------------------------------------
// Genericity certificate

/// gcd of the 2x2 minors of [df/ds ; df/dt]. Constant iff f is an immersion.
inline HomPoly2 immersion_failure_form(const RationalCurve& f) {
  std::vector<HomPoly2> ds, dt, minors;
  for (const auto& c : f.coords()) {
    ds.push_back(c.d_ds());
    dt.push_back(c.d_dt());
  }
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = a + 1; b < ds.size(); ++b) minors.push_back(ds[a] * dt[b] - ds[b] * dt[a]);
  if (std::all_of(minors.begin(), minors.end(), [](const HomPoly2& m) { return m.is_zero(); })) {
    throw std::invalid_argument("Jacobian of the curve has rank < 2 everywhere");
  }
  return hom_gcd(minors);
}

struct PairResultant {
  int i = 0;
  int j = 0;
  Rat value;
};

struct GenericityCertificate {
  /// hom. discriminant of C_i^(0) . f; empty when that form vanishes identically
  std::vector<std::optional<Rat>> discriminants;
  /// hom. resultant of (C_i^(0) . f, C_j^(0) . f), i < j
  std::vector<PairResultant> pair_resultants;
  /// C_a^(0) . f and sum_j (C_a^(j) . f)^2 share no root on P^1
  std::vector<bool> infinity_gcd_trivial;
  bool base_point_free = true;
  /// reported only; a cusp does not invalidate the direct ED count
  bool immersion = true;
  std::vector<std::string> reasons;

  bool passes() const { return reasons.empty(); }
};

inline GenericityCertificate genericity_certificate(const Arrangement& arr, const RationalCurve& f) {
  if (arr.N() != f.N()) throw std::invalid_argument("arrangement and curve live in different ambient spaces");
  GenericityCertificate cert;
  const int n = arr.n();
  std::vector<std::vector<HomPoly2>> images;
  for (const auto& cam : arr.cameras()) images.push_back(apply_camera(cam, f));

  for (int i = 0; i < n; ++i) {
    const HomPoly2& q = images[static_cast<std::size_t>(i)][0];
    const std::string tag = " (camera " + std::to_string(i + 1) + ")";
    if (q.is_zero()) {
      cert.discriminants.emplace_back(std::nullopt);
      cert.infinity_gcd_trivial.push_back(false);
      cert.reasons.push_back("image plane at infinity contains the curve" + tag);
      continue;
    }
    const Rat d = hom_discriminant(q);
    cert.discriminants.emplace_back(d);
    if (d == 0) cert.reasons.push_back("C^(0).f has a repeated root" + tag);

    HomPoly2 sq(2 * f.degree());
    for (std::size_t j = 1; j < images[static_cast<std::size_t>(i)].size(); ++j) {
      const auto& p = images[static_cast<std::size_t>(i)][j];
      sq += p * p;
    }
    const bool trivial = sq.is_zero() ? false : !hom_share_root(q, sq);
    cert.infinity_gcd_trivial.push_back(trivial);
    if (!trivial) cert.reasons.push_back("C^(0).f shares a root with the sum of squared image rows" + tag);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const HomPoly2& qi = images[static_cast<std::size_t>(i)][0];
      const HomPoly2& qj = images[static_cast<std::size_t>(j)][0];
      Rat r = (qi.is_zero() || qj.is_zero()) ? Rat(0) : hom_resultant(qi, qj);
      if (r == 0) {
        cert.reasons.push_back("cameras " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " share a point at infinity");
      }
      cert.pair_resultants.push_back({i, j, r});
    }
  cert.base_point_free = hom_gcd(f.coords()).degree() == 0;
  if (!cert.base_point_free) cert.reasons.push_back("curve has a base point");
  cert.immersion = immersion_failure_form(f).degree() == 0;
  return cert;
}

}  // namespace edcurve
