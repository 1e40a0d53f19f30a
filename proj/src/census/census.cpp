#include "liftscope/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "liftscope/decompose.hpp"
#include "liftscope/errors.hpp"

namespace liftscope {

namespace {

constexpr std::size_t kBlock = std::size_t(1) << 16;

// For a prime p not dividing lc_Y(F), a rational root of F(n, Y) reduces to
// a root of F(n mod p, Y) mod p. ok[r] records which residues r allow one;
// the table is stored repeated so that any window of kBlock bytes starting
// below p is contiguous.
struct Pattern {
  std::uint32_t p;
  std::vector<std::uint8_t> repeated;
};

struct FactorSieve {
  BiPoly F;
  std::vector<Pattern> patterns;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t residue(const Rational& c, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num().get_mpz_t(), p);
  return r.get_ui();
}

FactorSieve build_sieve(const BiPoly& F, int max_primes) {
  FactorSieve out;
  out.F = F;
  Integer lc = F.leading_coeff().get_num();
  int dx = F.deg_x(), dy = F.deg_y();
  for (std::uint32_t p : small_primes()) {
    if (int(out.patterns.size()) >= max_primes || p > 2000) break;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    // c[j][i]: coefficient of X^i Y^j mod p
    std::vector<std::vector<std::uint64_t>> c(std::size_t(dy) + 1, std::vector<std::uint64_t>(std::size_t(dx) + 1));
    for (int j = 0; j <= dy; ++j) {
      for (int i = 0; i <= dx; ++i) c[j][i] = residue(F.coeff(i, j), p);
    }
    std::vector<std::uint8_t> ok(p, 0);
    std::vector<std::uint64_t> yc(std::size_t(dy) + 1);
    std::size_t hits = 0;
    for (std::uint64_t r = 0; r < p; ++r) {
      for (int j = 0; j <= dy; ++j) {
        std::uint64_t acc = 0;
        for (int i = dx; i >= 0; --i) acc = (acc * r + c[j][i]) % p;
        yc[j] = acc;
      }
      for (std::uint64_t y = 0; y < p; ++y) {
        std::uint64_t acc = 0;
        for (int j = dy; j >= 0; --j) acc = (acc * y + yc[j]) % p;
        if (acc == 0) {
          ok[r] = 1;
          ++hits;
          break;
        }
      }
    }
    if (hits == p) continue;  // no information
    Pattern pat{p, {}};
    pat.repeated.resize(kBlock + p);
    for (std::size_t k = 0; k < pat.repeated.size(); ++k) pat.repeated[k] = ok[k % p];
    out.patterns.push_back(std::move(pat));
  }
  return out;
}

bool has_rational_root(const BiPoly& F, std::int64_t n) {
  return !distinct_rational_roots(F.eval_x(Rational(Integer(static_cast<long>(n))))).empty();
}

struct Plan {
  std::vector<FactorSieve> sieves;
  /// Integers in Z_R: checked directly against the full fiber.
  std::vector<std::int64_t> collisions;
  UniPoly f, g;
  std::vector<UniPoly> H;
};

bool direct_new_lift(const Plan& plan, std::int64_t n) {
  Rational x(Integer(static_cast<long>(n)));
  std::vector<Rational> ys = distinct_rational_roots(plan.g - UniPoly(plan.f.eval(x)));
  for (const Rational& y : ys) {
    bool graph = std::any_of(plan.H.begin(), plan.H.end(), [&](const UniPoly& h) { return h.eval(x) == y; });
    if (!graph) return true;
  }
  return false;
}

Plan make_plan(const UniPoly& f, const UniPoly& g, const std::vector<UniPoly>& h, int max_primes) {
  Plan plan;
  plan.f = f;
  plan.g = g;
  plan.H = h;
  BiFactorization fact = factor_separated(f, g);
  for (const BiPoly& F : strip_graphs(fact, h)) plan.sieves.push_back(build_sieve(F, max_primes));
  for (const Rational& z : collision_set(fact).ZR) {
    if (is_integral(z) && z.get_num().fits_slong_p()) plan.collisions.push_back(z.get_num().get_si());
  }
  return plan;
}

// Counted inputs in [lo, lo + len).
std::vector<std::int64_t> run_block(const Plan& plan, const simd::SieveKernels& k, std::int64_t lo, std::size_t len,
                                    std::vector<std::uint8_t>& mask, std::vector<std::uint32_t>& idx) {
  std::vector<std::int64_t> found;
  for (const FactorSieve& s : plan.sieves) {
    std::fill(mask.begin(), mask.begin() + std::ptrdiff_t(len), std::uint8_t(1));
    for (const Pattern& pat : s.patterns) {
      std::size_t off = std::size_t(mod_floor(lo, pat.p));
      k.and_bytes(mask.data(), pat.repeated.data() + off, len);
    }
    if (!k.any_nonzero(mask.data(), len)) continue;
    std::size_t cnt = k.collect_nonzero(mask.data(), len, idx.data());
    for (std::size_t i = 0; i < cnt; ++i) {
      std::int64_t n = lo + std::int64_t(idx[i]);
      if (std::binary_search(plan.collisions.begin(), plan.collisions.end(), n)) continue;
      if (has_rational_root(s.F, n)) found.push_back(n);
    }
  }
  for (std::int64_t n : plan.collisions) {
    if (n >= lo && n < lo + std::int64_t(len) && direct_new_lift(plan, n)) found.push_back(n);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

unsigned default_census_threads() {
  if (const char* env = std::getenv("LIFTSCOPE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CensusSeries census_curve(const UniPoly& f, const UniPoly& g, const std::vector<std::int64_t>& checkpoints,
                          const CensusOptions& options) {
  if (checkpoints.empty()) throw InputError("census: no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw InputError("census: checkpoints must be positive and strictly increasing");
    }
  }
  if (checkpoints.back() > (std::int64_t(1) << 40)) throw InputError("census: bound too large");
  Plan plan = make_plan(f, g, decompositions(f, g), options.max_primes);
  std::sort(plan.collisions.begin(), plan.collisions.end());
  const simd::SieveKernels& k = options.kernels ? *options.kernels : simd::best_kernels();

  std::int64_t bound = checkpoints.back();
  std::int64_t lo = -bound;
  std::uint64_t total = std::uint64_t(2 * bound + 1);
  std::size_t nblocks = std::size_t((total + kBlock - 1) / kBlock);
  std::vector<std::vector<std::int64_t>> results(nblocks);
  std::atomic<std::size_t> next{0};
  unsigned threads = options.threads ? options.threads : default_census_threads();
  threads = unsigned(std::min<std::size_t>(threads, nblocks));
  auto worker = [&] {
    std::vector<std::uint8_t> mask(kBlock);
    std::vector<std::uint32_t> idx(kBlock);
    for (std::size_t b; (b = next.fetch_add(1)) < nblocks;) {
      std::int64_t start = lo + std::int64_t(b * kBlock);
      std::size_t len = std::size_t(std::min<std::int64_t>(std::int64_t(kBlock), bound + 1 - start));
      results[b] = run_block(plan, k, start, len, mask, idx);
    }
  };
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mutex;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        next.store(nblocks);
      }
    });
  }
  try {
    worker();
  } catch (...) {
    std::lock_guard<std::mutex> lock(err_mutex);
    if (!err) err = std::current_exception();
    next.store(nblocks);
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);

  CensusSeries out;
  out.checkpoints = checkpoints;
  std::vector<std::uint64_t> by_height;
  for (const auto& r : results) {
    for (std::int64_t n : r) {
      by_height.push_back(std::uint64_t(n < 0 ? -n : n));
      if (options.keep_inputs) out.inputs.push_back(n);
    }
  }
  std::sort(by_height.begin(), by_height.end());
  for (std::int64_t b : checkpoints) {
    out.counts.push_back(std::uint64_t(std::upper_bound(by_height.begin(), by_height.end(), std::uint64_t(b)) -
                                       by_height.begin()));
  }
  try {
    out.fit = fit_exponent(out);
  } catch (const InputError&) {
  }
  return out;
}

std::uint64_t new_lift_count(const UniPoly& f, const UniPoly& g, const std::vector<UniPoly>& h, std::int64_t bound,
                             const CensusOptions& options) {
  std::vector<UniPoly> expected = decompositions(f, g);
  std::vector<UniPoly> given = h;
  std::sort(given.begin(), given.end(), [](const UniPoly& a, const UniPoly& b) { return canonical_less(a, b); });
  if (given != expected) throw InputError("new_lift_count: H is not the decomposition set of (f, g)");
  return census_curve(f, g, {bound}, options).counts.front();
}

FitResult fit_exponent(const CensusSeries& series, std::uint64_t min_count) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    if (series.counts[i] >= min_count && series.counts[i] > 0) {
      xs.push_back(std::log(double(series.checkpoints[i])));
      ys.push_back(std::log(double(series.counts[i])));
    }
  }
  if (xs.size() < 3) throw InputError("fit_exponent: fewer than three checkpoints with enough counts");
  double n = double(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  FitResult out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (out.intercept + out.slope * xs[i]);
    ss += e * e;
  }
  out.residual = std::sqrt(ss / n);
  out.points = int(xs.size());
  return out;
}

FitVerdict compare_with_prediction(const CensusSeries& series, const LiftReport& report, const VerdictOptions& options) {
  FitVerdict v;
  char buf[160];
  switch (report.growth) {
    case GrowthKind::Power: {
      if (!series.fit) {
        v.text = "not enough data to fit a slope";
        return v;
      }
      double theta = report.theta->get_d();
      double diff = std::abs(series.fit->slope - theta);
      v.consistent = diff <= options.tolerance;
      std::snprintf(buf, sizeof buf, "slope %.4f vs predicted %s (|diff| %.4f, tolerance %.2f)", series.fit->slope,
                    to_string(*report.theta).c_str(), diff, options.tolerance);
      v.text = buf;
      return v;
    }
    case GrowthKind::Polylog: {
      if (!series.fit) {
        v.text = "not enough data to fit a slope";
        return v;
      }
      v.consistent = series.fit->slope < options.polylog_threshold;
      std::snprintf(buf, sizeof buf, "slope %.4f vs polylogarithmic threshold %.2f", series.fit->slope,
                    options.polylog_threshold);
      v.text = buf;
      return v;
    }
    case GrowthKind::Bounded: {
      // Bounded growth: the last two checkpoints agree.
      std::size_t n = series.counts.size();
      v.consistent = n < 2 || series.counts[n - 1] == series.counts[n - 2];
      v.text = "count " + std::to_string(series.counts.back()) + " at the largest checkpoint";
      return v;
    }
    case GrowthKind::Unknown:
      v.text = "no prediction to compare against";
      return v;
  }
  return v;
}

}  // namespace liftscope
