// Command implementations behind the edcurve executable. Each cmd_* writes to
// the given streams and returns the process exit status:
//   0 success, 1 input error, 2 genericity exhaustion, 3 formula mismatch.

#pragma once

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edcurve/eddeg.hpp"
#include "edcurve/grassmann.hpp"
#include "edcurve/io.hpp"
#include "edcurve/multidegree.hpp"
#include "edcurve/scene.hpp"

namespace edcurve {

enum ExitCode : int { kOk = 0, kInputError = 1, kGenericityExhausted = 2, kFormulaMismatch = 3 };

struct IntRange {
  int lo = 1;
  int hi = 1;
};

/// "A..B" or a single integer "A". Throws InputError on malformed text or
/// an empty range.
inline IntRange parse_range(const std::string& text) {
  IntRange r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument("");
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw InputError("malformed range '" + text + "' (expected A..B)");
  }
  if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
  return r;
}

/// Comma-separated integers, e.g. "2,3".
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

struct RunConfig {
  std::string command;
  std::string curve_path;
  std::string cameras_path;
  std::string data_path;
  std::string bezier1_path;
  std::string bezier2_path;
  std::uint64_t seed = 0;
  std::string e_range = "1..3";
  std::string n_range = "1..3";
  std::string h_list = "2";
  std::optional<int> N;
  std::string family = "random";
  int k = 2;
  std::string order = "lex";
  std::string tol = "1/1000000000";
  bool json = false;
  int retries = 8;
  std::vector<std::string> factors;
  /// variable count for multidegree; inferred from the factors when unset
  std::optional<int> vars;
  bool allow_h1 = false;
};

namespace detail {

inline void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required option ") + flag);
}

struct Attempt {
  std::uint64_t seed;
  bool passes;
  std::vector<std::string> reasons;
};

inline Json attempts_json(const std::vector<Attempt>& attempts) {
  Json a = Json::array();
  for (const auto& t : attempts) a.push_back({{"seed", t.seed}, {"passes", t.passes}, {"reasons", t.reasons}});
  return a;
}

/// ED report with stable data; reseeds the data point up to retries times.
inline std::optional<EDReport> stable_report(const RationalCurve& f, const Arrangement& arr, std::uint64_t seed,
                                             int retries, const EdOptions& opts) {
  for (int k = 0; k <= retries; ++k) {
    try {
      return ed_degree_affine(f, arr, seed + 2 * static_cast<std::uint64_t>(k), opts);
    } catch (const NonGenericData&) {
    }
  }
  return std::nullopt;
}

inline void attach_cross_check(EDReport& rep, const RationalCurve& f, const Arrangement& arr, std::uint64_t seed) {
  if (!rep.certificate.passes() || !rep.certificate.immersion || rep.h < 2) return;
  try {
    rep.cross_check = euler_cross_check(f, arr, derive_seed(seed, 0xC0FFEE));
    rep.cross_check_agrees = *rep.cross_check == rep.ed_degree;
  } catch (const CrossCheckRefused&) {
  }
}

/// Random arrangement whose certificate passes, reseeding up to retries times.
struct SampledCell {
  std::optional<Arrangement> arr;
  std::vector<Attempt> attempts;
};

inline SampledCell sample_generic_arrangement(const RationalCurve& f, std::uint64_t seed, int n, int h, int retries,
                                              const CameraSupport& support = {}) {
  SampledCell out;
  for (int k = 0; k <= retries; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    Arrangement arr = random_arrangement(s, n, h, f.N(), 10, support);
    const auto cert = genericity_certificate(arr, f);
    out.attempts.push_back({s, cert.passes(), cert.reasons});
    if (cert.passes()) {
      out.arr = std::move(arr);
      return out;
    }
  }
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_eddeg(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require(cfg.curve_path, "--curve");
  detail::require(cfg.cameras_path, "--cameras");
  const RationalCurve f = curve_from_json(read_json_file(cfg.curve_path));
  const Arrangement arr = arrangement_from_json(read_json_file(cfg.cameras_path));
  if (f.N() != arr.N()) {
    throw InputError("cameras expect N = " + std::to_string(arr.N()) + " but the curve has N = " +
                     std::to_string(f.N()));
  }
  if (arr.h() < 2 && !(cfg.allow_h1 && arr.h() == 1)) throw InputError("h >= 2 required (use --allow-h1 for h = 1)");
  auto rep = detail::stable_report(f, arr, cfg.seed, cfg.retries, {cfg.allow_h1});
  if (!rep) {
    err << "error: critical count unstable across " << cfg.retries + 1 << " data samples\n";
    return kGenericityExhausted;
  }
  detail::attach_cross_check(*rep, f, arr, cfg.seed);
  if (cfg.json) {
    out << report_to_json(*rep).dump(2) << "\n";
    return kOk;
  }
  out << "e = " << rep->e << ", n = " << rep->n << ", h = " << rep->h << ", N = " << rep->N << "\n";
  out << "ED degree: " << rep->ed_degree << "\n";
  out << "critical polynomial degree: " << rep->critical_poly_degree << "\n";
  out << "removed pole roots: " << rep->removed_pole_factors << ", removed cusp roots: " << rep->removed_immersion_factors
      << "\n";
  out << "3en-2 = " << rep->formula_value << (rep->matches_formula ? " (match)" : " (differs)") << "\n";
  out << "certificate: " << (rep->certificate.passes() ? "passes" : "fails") << "\n";
  for (const auto& r : rep->certificate.reasons) out << "  - " << r << "\n";
  out << "immersion: " << detail::yes_no(rep->certificate.immersion) << "\n";
  if (rep->cross_check) out << "Euler cross-check: " << *rep->cross_check << "\n";
  return kOk;
}

/// Grid over (e, n, h). With --curve the grid collapses to that curve's
/// degree and ambient space.
inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::optional<RationalCurve> fixed;
  if (!cfg.curve_path.empty()) fixed = curve_from_json(read_json_file(cfg.curve_path));
  const IntRange er = fixed ? IntRange{fixed->degree(), fixed->degree()} : parse_range(cfg.e_range);
  const IntRange nr = parse_range(cfg.n_range);
  const std::vector<int> hs = parse_int_list(cfg.h_list);
  if (cfg.family != "random" && cfg.family != "monomial") throw InputError("--family must be random or monomial");
  if (er.lo < 1 || nr.lo < 1) throw InputError("e and n must be positive");
  for (int h : hs)
    if (h < 2) throw InputError("sweep needs h >= 2");

  Json cells = Json::array();
  bool mismatch = false, exhausted = false;
  std::uint64_t cell = 0;
  std::ostringstream table;
  table << std::setw(3) << "e" << std::setw(4) << "n" << std::setw(4) << "h" << std::setw(4) << "N" << std::setw(6)
        << "ED" << std::setw(8) << "3en-2" << std::setw(7) << "match" << std::setw(7) << "euler" << "  seed\n";
  for (int e = er.lo; e <= er.hi; ++e)
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int h : hs) {
        const std::uint64_t cs = derive_seed(cfg.seed, cell++);
        if (!fixed && cfg.family == "monomial" && e <= h) throw InputError("monomial family needs e > h");
        const int N = fixed ? fixed->N() : cfg.family == "monomial" ? e : cfg.N.value_or(std::max(3, e));
        if (!fixed && N < e && cfg.family == "random") throw InputError("--N must be at least the curve degree");
        if (h > N) throw InputError("sweep needs h <= N");
        const RationalCurve f = fixed                        ? *fixed
                                : cfg.family == "monomial" ? rational_normal_curve(e, N)
                                                           : random_curve(cs, e, N);
        auto sampled = detail::sample_generic_arrangement(f, derive_seed(cs, 1), n, h, cfg.retries);
        Json c = {{"e", e}, {"n", n}, {"h", h}, {"N", N}, {"seed", cs}, {"formula_value", 3 * e * n - 2},
                  {"attempts", detail::attempts_json(sampled.attempts)}};
        std::optional<EDReport> rep;
        if (sampled.arr) rep = detail::stable_report(f, *sampled.arr, derive_seed(cs, 2), cfg.retries, {});
        if (!rep) {
          exhausted = true;
          c["status"] = "exhausted";
          c["report"] = nullptr;
          table << std::setw(3) << e << std::setw(4) << n << std::setw(4) << h << std::setw(4) << N
                << "  genericity exhausted\n";
        } else {
          detail::attach_cross_check(*rep, f, *sampled.arr, cs);
          const bool ok = rep->matches_formula && rep->cross_check_agrees.value_or(true);
          if (!ok) mismatch = true;
          c["status"] = ok ? "match" : "mismatch";
          c["report"] = report_to_json(*rep);
          table << std::setw(3) << e << std::setw(4) << n << std::setw(4) << h << std::setw(4) << N << std::setw(6)
                << rep->ed_degree << std::setw(8) << rep->formula_value << std::setw(7)
                << detail::yes_no(rep->matches_formula) << std::setw(7)
                << (rep->cross_check ? std::to_string(*rep->cross_check) : std::string("-")) << "  " << cs << "\n";
        }
        cells.push_back(std::move(c));
      }
  if (cfg.json) {
    out << Json{{"command", "sweep"}, {"seed", cfg.seed}, {"cells", cells}}.dump(2) << "\n";
  } else {
    out << table.str();
  }
  if (mismatch) return kFormulaMismatch;
  if (exhausted) return kGenericityExhausted;
  return kOk;
}

inline int cmd_l3(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const IntRange nr = parse_range(cfg.n_range);
  const std::vector<int> hs = parse_int_list(cfg.h_list);
  for (int h : hs)
    if (h != 2 && h != 3) throw InputError("l3 needs h in {2,3}");
  if (nr.lo < 1) throw InputError("n must be positive");

  const RationalCurve l3 = l3_curve();
  Json rows = Json::array();
  bool mismatch = false, exhausted = false;
  std::ostringstream table;
  table << std::setw(3) << "h" << std::setw(4) << "n" << "  " << std::left << std::setw(12) << "ambient"
        << std::setw(36) << "multidegree" << std::right << std::setw(5) << "ED" << std::setw(7) << "6n-2" << "\n";
  std::uint64_t cell = 0;
  for (int h : hs)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const std::uint64_t cs = derive_seed(cfg.seed, cell++);
      const int H = (h + 1) * h / 2 - 1;  // wedge image lives in P^H
      const std::string ambient = "(P^" + std::to_string(H) + ")^" + std::to_string(n);
      const std::string md = to_dual_string(curve_multidegree(2, n, H));
      std::optional<EDReport> rep;
      std::vector<detail::Attempt> attempts;
      for (int k = 0; k <= cfg.retries && !rep; ++k) {
        const std::uint64_t s = cs + static_cast<std::uint64_t>(k);
        const Arrangement wedge = wedge_arrangement(random_arrangement(s, n, h, 3));
        const auto cert = genericity_certificate(wedge, l3);
        attempts.push_back({s, cert.passes(), cert.reasons});
        if (cert.passes()) rep = detail::stable_report(l3, wedge, derive_seed(s, 2), cfg.retries, {});
      }
      Json row = {{"h", h}, {"n", n}, {"ambient", ambient}, {"multidegree", md}, {"expected", 6 * n - 2},
                  {"attempts", detail::attempts_json(attempts)}};
      if (!rep) {
        exhausted = true;
        row["ed_degree"] = nullptr;
        table << std::setw(3) << h << std::setw(4) << n << "  genericity exhausted\n";
      } else {
        if (rep->ed_degree != 6 * n - 2) mismatch = true;
        row["ed_degree"] = rep->ed_degree;
        table << std::setw(3) << h << std::setw(4) << n << "  " << std::left << std::setw(12) << ambient
              << std::setw(36) << md << std::right << std::setw(5) << rep->ed_degree << std::setw(7) << 6 * n - 2
              << "\n";
      }
      rows.push_back(std::move(row));
    }
  if (cfg.json) {
    out << Json{{"command", "l3"}, {"seed", cfg.seed}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << table.str();
  }
  if (mismatch) return kFormulaMismatch;
  if (exhausted) return kGenericityExhausted;
  return kOk;
}

inline int cmd_triangulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.curve_path, "--curve");
  detail::require(cfg.cameras_path, "--cameras");
  const RationalCurve f = curve_from_json(read_json_file(cfg.curve_path));
  const Arrangement arr = arrangement_from_json(read_json_file(cfg.cameras_path));
  if (f.N() != arr.N()) throw InputError("cameras and curve live in different ambient spaces");
  const DataPoint u =
      cfg.data_path.empty() ? random_data_point(cfg.seed, arr.n(), arr.h()) : data_from_json(read_json_file(cfg.data_path));
  if (static_cast<int>(u.u.size()) != arr.n()) throw InputError("data.u: expected one block per camera");
  for (const auto& b : u.u)
    if (static_cast<int>(b.size()) != arr.h()) throw InputError("data.u: every block needs h entries");
  Rat tol;
  try {
    tol = parse_rat(cfg.tol);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--tol: ") + e.what());
  }
  if (tol <= 0) throw InputError("--tol must be positive");
  const TriangulationResult r = triangulate(f, arr, u, tol);
  if (cfg.json) {
    Json j = triangulation_to_json(r);
    j["data"] = data_to_json(u);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "real critical points: " << r.critical.size() << " (of " << r.reduced_degree << " complex)\n";
  for (std::size_t k = 0; k < r.critical.size(); ++k) {
    const auto& c = r.critical[k];
    out << "  t in [" << to_string(c.interval.lo) << ", " << to_string(c.interval.hi)
        << "]  d = " << c.distance.get_d() << (r.argmin && *r.argmin == k ? "  <- minimum" : "") << "\n";
  }
  if (!r.has_finite_minimizer()) {
    out << "no finite minimizer\n";
    return kOk;
  }
  const auto& best = r.critical[*r.argmin];
  out << "t* = " << to_string(best.t) << "\n";
  out << "squared distance = " << to_string(best.distance) << " (~" << best.distance.get_d() << ")\n";
  out << "world point:";
  for (const auto& x : r.world_point) out << " " << to_string(x);
  out << "\n";
  return kOk;
}

inline int cmd_wedge(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.cameras_path, "--cameras");
  const Arrangement arr = arrangement_from_json(read_json_file(cfg.cameras_path));
  SubsetOrder order;
  if (cfg.order == "lex") {
    order = SubsetOrder::lex;
  } else if (cfg.order == "colex") {
    order = SubsetOrder::colex;
  } else {
    throw InputError("--order must be lex or colex");
  }
  if (cfg.k < 1 || cfg.k > arr.h() + 1) throw InputError("--k must satisfy 1 <= k <= h+1");
  Json cams = Json::array();
  for (int i = 0; i < arr.n(); ++i) {
    const WedgeCamera w = wedge_camera(arr[i], cfg.k, order);
    const auto rows = k_subsets(arr.h() + 1, cfg.k, order);
    const auto cols = k_subsets(arr.N() + 1, cfg.k, order);
    auto label = [](const std::vector<int>& s) {
      std::string l;
      for (int x : s) l += std::to_string(x + 1);
      return l;
    };
    if (cfg.json) {
      Json j = camera_to_json(w.as_camera());
      Json rl = Json::array(), cl = Json::array();
      for (const auto& r : rows) rl.push_back(label(r));
      for (const auto& c : cols) cl.push_back(label(c));
      j["row_labels"] = rl;
      j["col_labels"] = cl;
      cams.push_back(std::move(j));
      continue;
    }
    if (arr.n() > 1) out << "camera " << i + 1 << "\n";
    out << std::setw(6) << "";
    for (const auto& c : cols) out << std::setw(6) << label(c);
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << std::setw(6) << label(rows[r]);
      for (std::size_t c = 0; c < cols.size(); ++c)
        out << std::setw(6) << to_string(w.entries(static_cast<int>(r), static_cast<int>(c)));
      out << "\n";
    }
  }
  if (cfg.json) out << Json{{"order", cfg.order}, {"k", cfg.k}, {"cameras", cams}}.dump(2) << "\n";
  return kOk;
}

/// Multiplies the given factors in the ring (n, h); n is inferred from the
/// highest variable index unless --vars is given; no truncation.
inline int cmd_multidegree(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.factors.empty()) throw InputError("multidegree needs at least one --factor");
  int n = 1;
  for (const auto& f : cfg.factors) {
    for (std::size_t p = 0; p < f.size(); ++p) {
      if ((f[p] == 'T' || f[p] == 't') && p + 1 < f.size()) {
        std::size_t q = p + 1;
        if (f[q] == '_') ++q;
        std::size_t end = q;
        while (end < f.size() && std::isdigit(static_cast<unsigned char>(f[end]))) ++end;
        if (end > q) n = std::max(n, std::stoi(f.substr(q, end - q)));
      }
    }
  }
  if (cfg.vars) n = *cfg.vars;
  if (n < 1) throw InputError("--vars must be positive");
  const int h = static_cast<int>(cfg.factors.size()) * 8;  // large enough that nothing truncates
  MultiDeg prod = MultiDeg::constant(n, h, 1);
  for (const auto& f : cfg.factors) {
    try {
      prod = prod * parse_multideg(f, n, h);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (cfg.json) {
    out << Json{{"product", to_string(prod)}}.dump(2) << "\n";
  } else {
    out << to_string(prod) << "\n";
  }
  return kOk;
}

inline int cmd_scroll(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.bezier1_path, "--bezier1");
  detail::require(cfg.bezier2_path, "--bezier2");
  const BezierCurve b1 = bezier_from_json(read_json_file(cfg.bezier1_path), "bezier1");
  const BezierCurve b2 = bezier_from_json(read_json_file(cfg.bezier2_path), "bezier2");
  RationalCurve f = [&] {
    try {
      return bezier_scroll(b1, b2);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const IntRange nr = parse_range(cfg.n_range);
  if (nr.lo < 1) throw InputError("n must be positive");
  const int E = b1.E + b2.E;
  Json rows = Json::array();
  bool mismatch = false, exhausted = false;
  std::ostringstream table;
  table << "scroll degree " << f.degree() << " (E1 + E2 = " << E << ")\n";
  table << std::setw(4) << "n" << std::setw(6) << "ED" << std::setw(14) << "3(E1+E2)n-2" << "\n";
  if (f.degree() != E) mismatch = true;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    const std::uint64_t cs = derive_seed(cfg.seed, static_cast<std::uint64_t>(n));
    std::optional<EDReport> rep;
    std::vector<detail::Attempt> attempts;
    for (int k = 0; k <= cfg.retries && !rep; ++k) {
      const std::uint64_t s = cs + static_cast<std::uint64_t>(k);
      const Arrangement wedge = wedge_arrangement(random_arrangement(s, n, 2, 3));
      const auto cert = genericity_certificate(wedge, f);
      attempts.push_back({s, cert.passes(), cert.reasons});
      if (cert.passes()) rep = detail::stable_report(f, wedge, derive_seed(s, 2), cfg.retries, {});
    }
    const int expected = 3 * E * n - 2;
    Json row = {{"n", n}, {"expected", expected}, {"attempts", detail::attempts_json(attempts)}};
    if (!rep) {
      exhausted = true;
      row["ed_degree"] = nullptr;
      table << std::setw(4) << n << "  genericity exhausted\n";
    } else {
      if (rep->ed_degree != expected) mismatch = true;
      row["ed_degree"] = rep->ed_degree;
      table << std::setw(4) << n << std::setw(6) << rep->ed_degree << std::setw(14) << expected << "\n";
    }
    rows.push_back(std::move(row));
  }
  if (cfg.json) {
    out << Json{{"command", "scroll"}, {"degree", f.degree()}, {"E", E}, {"curve", curve_to_json(f)}, {"rows", rows}}
               .dump(2)
        << "\n";
  } else {
    out << table.str();
  }
  if (mismatch) return kFormulaMismatch;
  if (exhausted) return kGenericityExhausted;
  return kOk;
}

/// Dispatches on cfg.command and maps errors to exit codes.
inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "eddeg") return cmd_eddeg(cfg, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
    if (cfg.command == "l3") return cmd_l3(cfg, out, err);
    if (cfg.command == "triangulate") return cmd_triangulate(cfg, out, err);
    if (cfg.command == "wedge") return cmd_wedge(cfg, out, err);
    if (cfg.command == "multidegree") return cmd_multidegree(cfg, out, err);
    if (cfg.command == "scroll") return cmd_scroll(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kGenericityExhausted;
  }
}

}  // namespace edcurve
