#include "extremal/drc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal::drc {

namespace {

constexpr long long kTupleBudget = 5'000'000;      // bad-tuple scan over S'
constexpr long long kExhaustiveVerify = 1'000'000; // full re-check of S
constexpr long long kSampledChecks = 100'000;      // fallback spot-checks

double ln_rational(const Rational& r) { return std::log(rational_double(r)); }

// C(m,t), clamped to cap+1 once it exceeds cap. m <= 64 here, but the
// running product can outgrow long long, hence the wide intermediate.
long long tuple_count_clamped(int m, int t, long long cap) {
  if (t > m) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= t; ++i) {
    r = r * static_cast<unsigned>(m - t + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(cap)) return cap + 1;
  }
  return static_cast<long long>(r);
}

// Calls f(members) for every t-subset of verts, ascending within a tuple and
// lexicographic across tuples.
template <class F>
void for_each_tuple(const std::vector<int>& verts, int t, F f) {
  int m = static_cast<int>(verts.size());
  if (t > m || t <= 0) return;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> members(t);
  for (;;) {
    for (int i = 0; i < t; ++i) members[i] = verts[idx[i]];
    f(members);
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gamma^a * n. Exact rational comparison when a is a modest integer (every
// desk-scale parameter set lands here); log-domain doubles with a 1e-12
// slack on the strict side otherwise.
struct TupleThreshold {
  bool exact = false;
  Rational value;
  double log_value = 0;
  double as_double = 0;

  bool below(long long count) const {
    if (exact) return Rational(count) < value;
    if (count <= 0) return true;  // threshold is strictly positive
    return std::log(static_cast<double>(count)) < log_value - 1e-12;
  }
};

TupleThreshold make_threshold(const DRCParams& p) {
  Rational a = drc_exponent_a(p);
  TupleThreshold th;
  th.log_value =
      rational_double(a) * ln_rational(p.gamma) + std::log(static_cast<double>(p.n));
  th.as_double = std::exp(th.log_value);
  if (denominator(a) == 1 && numerator(a) >= 0 && numerator(a) <= 4096) {
    int e = numerator(a).convert_to<int>();
    Rational pow = 1, base = p.gamma;
    for (int b = e; b > 0; b >>= 1) {
      if (b & 1) pow *= base;
      base *= base;
    }
    th.value = pow * Rational(p.n);
    th.exact = true;
  }
  return th;
}

struct HostView {
  const Graph* g = nullptr;
  std::vector<VertexSet> zone;
  std::vector<std::vector<int>> zone_verts;
};

HostView split_host(const Graph& host, const std::vector<int>& part, const DRCParams& p) {
  if (static_cast<int>(part.size()) != host.vertex_count())
    throw PreconditionError("drc: part vector has " + std::to_string(part.size()) +
                            " labels for a host of order " +
                            std::to_string(host.vertex_count()));
  if (static_cast<long long>(p.k) * p.n != host.vertex_count())
    throw PreconditionError("drc: host order " + std::to_string(host.vertex_count()) +
                            " != k*n = " + std::to_string(p.k * p.n));
  HostView hv;
  hv.g = &host;
  hv.zone.assign(p.k, VertexSet());
  for (int v = 0; v < host.vertex_count(); ++v) {
    if (part[v] < 0 || part[v] >= p.k)
      throw PreconditionError("drc: vertex " + std::to_string(v) + " labeled " +
                              std::to_string(part[v]) + ", outside [0," +
                              std::to_string(p.k) + ")");
    hv.zone[part[v]] = hv.zone[part[v]].with(v);
  }
  for (int i = 0; i < p.k; ++i)
    if (hv.zone[i].count() != p.n)
      throw PreconditionError("drc: part " + std::to_string(i) + " has " +
                              std::to_string(hv.zone[i].count()) +
                              " vertices, expected n = " + std::to_string(p.n));
  hv.zone_verts.resize(p.k);
  for (int i = 0; i < p.k; ++i) hv.zone_verts[i] = hv.zone[i].to_vector();
  return hv;
}

void check_degree_floor(const HostView& hv, const DRCParams& p) {
  Rational floor = p.gamma * Rational(p.n);
  for (int v : hv.zone_verts[p.k - 1])
    for (int i = 0; i + 1 < p.k; ++i) {
      int cnt = (hv.g->neighbors(v) & hv.zone[i]).count();
      if (Rational(cnt) < floor)
        throw PreconditionError("drc: vertex " + std::to_string(v) + " has " +
                                std::to_string(cnt) + " neighbors in part " +
                                std::to_string(i) + ", below gamma*n = " +
                                fraction_string(floor));
    }
}

DRCOutcome run_once(const HostView& hv, const DRCParams& p, const TupleThreshold& th,
                    long long q, std::uint64_t seed) {
  const Graph& g = *hv.g;
  CounterRng rng(seed);

  std::uint64_t common = hv.zone[p.k - 1].bits();
  for (int i = 0; i + 1 < p.k; ++i) {
    CounterRng probe = rng.fork(static_cast<std::uint64_t>(i));
    const auto& verts = hv.zone_verts[i];
    for (long long j = 0; j < q; ++j)
      common &= g.row_bits(verts[probe.below(verts.size())]);
  }
  VertexSet sprime = VertexSet::from_bits(common) & hv.zone[p.k - 1];

  DRCOutcome out;
  out.q = q;
  out.s_prime_size = sprime.count();
  out.tuple_threshold = th.as_double;
  out.warnings = drc_warnings(p);

  std::vector<int> sv = sprime.to_vector();
  if (tuple_count_clamped(static_cast<int>(sv.size()), p.t, kTupleBudget) > kTupleBudget)
    throw BudgetError("drc: C(" + std::to_string(sv.size()) + "," + std::to_string(p.t) +
                      ") tuples of S' exceed the enumeration budget " +
                      std::to_string(kTupleBudget));

  auto parts_ok = [&](const std::vector<int>& tup, long long* min_seen) {
    std::uint64_t cn = ~0ull;
    for (int v : tup) cn &= g.row_bits(v);
    bool ok = true;
    for (int i = 0; i + 1 < p.k; ++i) {
      long long cnt = VertexSet::from_bits(cn & hv.zone[i].bits()).count();
      if (min_seen && (*min_seen < 0 || cnt < *min_seen)) *min_seen = cnt;
      if (th.below(cnt)) ok = false;
    }
    return ok;
  };

  VertexSet deleted;
  for_each_tuple(sv, p.t, [&](const std::vector<int>& tup) {
    if (parts_ok(tup, nullptr)) return;
    ++out.bad_count;
    for (int v : tup)
      if (deleted.contains(v)) return;  // already broken by an earlier deletion
    deleted = deleted.with(tup.back());
  });

  VertexSet s = sprime - deleted;
  out.s_vertices = s.to_vector();
  out.s_size = s.count();

  out.guarantee_ok = true;
  if (out.s_size < p.t) {
    out.guarantee_exhaustive = true;  // nothing to check
  } else if (tuple_count_clamped(static_cast<int>(out.s_size), p.t, kExhaustiveVerify) <=
             kExhaustiveVerify) {
    out.guarantee_exhaustive = true;
    for_each_tuple(out.s_vertices, p.t, [&](const std::vector<int>& tup) {
      if (!parts_ok(tup, &out.min_common_neighborhood)) out.guarantee_ok = false;
    });
  } else {
    out.guarantee_exhaustive = false;
    CounterRng ver = rng.fork(0x5eedull);
    std::vector<int> perm(out.s_vertices.size());
    std::vector<int> tup(p.t);
    for (long long d = 0; d < kSampledChecks; ++d) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int j = 0; j < p.t; ++j)
        std::swap(perm[j], perm[j + ver.below(perm.size() - j)]);
      for (int j = 0; j < p.t; ++j) tup[j] = out.s_vertices[perm[j]];
      if (!parts_ok(tup, &out.min_common_neighborhood)) out.guarantee_ok = false;
    }
  }
  return out;
}

Rational rational_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    auto r = parse_rational(v.get<std::string>());
    if (r) return *r;
  }
  throw PreconditionError(std::string("drc params: field '") + key +
                          "' must be an integer or a \"p/q\" string");
}

}  // namespace

void check_params(const DRCParams& p) {
  if (p.k < 2)
    throw PreconditionError("drc: k = " + std::to_string(p.k) + ", need k >= 2");
  if (p.t < 2)
    throw PreconditionError("drc: t = " + std::to_string(p.t) + ", need t >= 2");
  if (p.n < 2)
    throw PreconditionError("drc: part size n = " + std::to_string(p.n) +
                            ", need n >= 2");
  if (!(p.gamma > 0 && p.gamma < 1))
    throw PreconditionError("drc: gamma = " + fraction_string(p.gamma) +
                            " outside (0,1)");
  if (!(p.c > 0))
    throw PreconditionError("drc: c = " + fraction_string(p.c) + " must be positive");
}

std::vector<std::string> drc_warnings(const DRCParams& p) {
  check_params(p);
  std::vector<std::string> w;
  double c_floor = 4.0 / std::log2(static_cast<double>(p.n));
  if (rational_double(p.c) + 1e-12 < c_floor)
    w.push_back("c = " + fraction_string(p.c) + " is below 4/log2(n) = " +
                std::to_string(c_floor) + "; the n^(c/2) factors are weak at this n");
  TupleThreshold th = make_threshold(p);
  if (th.log_value < -1e-12)
    w.push_back("tuple threshold gamma^a * n = " + std::to_string(th.as_double) +
                " is below 1; the tuple guarantee is vacuous");
  return w;
}

Rational drc_exponent_a(const DRCParams& p) {
  check_params(p);
  return Rational(2LL * (p.k - 1) * (p.t + 1)) / p.c;
}

SampleSize drc_sample_size_q(const DRCParams& p) {
  check_params(p);
  double ln_n = std::log(static_cast<double>(p.n));
  SampleSize s;
  s.q_real = -(rational_double(p.c) / (2.0 * (p.k - 1))) * (ln_n / ln_rational(p.gamma));
  // snap to the nearest integer before ceiling so that an analytically
  // integral q_real does not get bumped by double noise
  double snapped = std::round(s.q_real);
  if (std::abs(s.q_real - snapped) <= 1e-9 * std::max(1.0, std::abs(s.q_real)))
    s.q = static_cast<long long>(snapped);
  else
    s.q = static_cast<long long>(std::ceil(s.q_real));
  if (s.q < 1) s.q = 1;
  return s;
}

DRCIdentityReport drc_expectation_identities(const DRCParams& p) {
  check_params(p);
  DRCIdentityReport r;
  double ln_n = std::log(static_cast<double>(p.n));
  double ln_g = ln_rational(p.gamma);
  double c = rational_double(p.c);
  r.q_real = drc_sample_size_q(p).q_real;
  r.a = rational_double(drc_exponent_a(p));

  r.sprime_log_lhs = ln_n + (p.k - 1) * r.q_real * ln_g;
  r.sprime_log_rhs = (1.0 - c / 2.0) * ln_n;
  r.sprime_rel_err = std::abs(r.sprime_log_lhs - r.sprime_log_rhs) /
                     std::max(1.0, std::abs(r.sprime_log_rhs));

  r.bad_log_lhs = p.t * ln_n + r.a * r.q_real * ln_g;
  r.bad_log_rhs = -ln_n;
  r.bad_rel_err =
      std::abs(r.bad_log_lhs - r.bad_log_rhs) / std::max(1.0, std::abs(r.bad_log_rhs));

  r.identities_ok = r.sprime_rel_err <= 1e-9 && r.bad_rel_err <= 1e-9;
  double n = static_cast<double>(p.n);
  r.expectation_lower = std::pow(n, 1.0 - c / 2.0) - 1.0 / n;
  r.expectation_bound = 0.5 * std::pow(n, 1.0 - c / 2.0);
  r.size_floor = 0.5 * std::pow(n, 1.0 - c);
  r.warnings = drc_warnings(p);
  return r;
}

DRCOutcome drc_run(const Graph& host, const std::vector<int>& part, const DRCParams& p,
                   std::uint64_t seed) {
  check_params(p);
  HostView hv = split_host(host, part, p);
  check_degree_floor(hv, p);
  return run_once(hv, p, make_threshold(p), drc_sample_size_q(p).q, seed);
}

DRCMonteCarlo drc_monte_carlo(const Graph& host, const std::vector<int>& part,
                              const DRCParams& p, long long trials, std::uint64_t seed,
                              unsigned workers) {
  check_params(p);
  if (trials < 1)
    throw PreconditionError("drc_monte_carlo: trials = " + std::to_string(trials));
  HostView hv = split_host(host, part, p);
  check_degree_floor(hv, p);
  TupleThreshold th = make_threshold(p);
  long long q = drc_sample_size_q(p).q;

  // one slot per trial, seed a pure function of (seed, trial): any worker
  // layout produces the same vector
  std::vector<double> vals(static_cast<std::size_t>(trials));
  auto run_range = [&](long long lo, long long hi) {
    for (long long i = lo; i < hi; ++i) {
      std::uint64_t trial_seed = CounterRng(seed).fork(static_cast<std::uint64_t>(i)).next();
      DRCOutcome o = run_once(hv, p, th, q, trial_seed);
      vals[static_cast<std::size_t>(i)] = static_cast<double>(o.s_prime_size - o.bad_count);
    }
  };
  long long w = std::max(1u, workers);
  w = std::min<long long>(w, trials);
  if (w == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (trials + w - 1) / w;
    for (long long i = 0; i < w; ++i) {
      long long lo = i * chunk, hi = std::min(trials, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  DRCMonteCarlo m;
  m.trials = trials;
  double sum = std::accumulate(vals.begin(), vals.end(), 0.0);
  m.mean = sum / static_cast<double>(trials);
  if (trials >= 2) {
    double ss = 0;
    for (double x : vals) ss += (x - m.mean) * (x - m.mean);
    m.std_error = std::sqrt(ss / static_cast<double>(trials - 1)) /
                  std::sqrt(static_cast<double>(trials));
  }
  m.bound = 0.5 * std::pow(static_cast<double>(p.n), 1.0 - rational_double(p.c) / 2.0);
  return m;
}

nlohmann::json drc_params_json(const DRCParams& p) {
  return {{"k", p.k},
          {"n", p.n},
          {"gamma", fraction_string(p.gamma)},
          {"c", fraction_string(p.c)},
          {"t", p.t}};
}

DRCParams drc_params_from_json(const nlohmann::json& j) {
  DRCParams p;
  p.k = j.at("k").get<int>();
  p.n = j.at("n").get<long long>();
  p.gamma = rational_field(j, "gamma");
  p.c = rational_field(j, "c");
  p.t = j.at("t").get<int>();
  check_params(p);
  return p;
}

nlohmann::json drc_identity_json(const DRCIdentityReport& r) {
  return {{"q_real", r.q_real},
          {"a", r.a},
          {"sprime_log_lhs", r.sprime_log_lhs},
          {"sprime_log_rhs", r.sprime_log_rhs},
          {"sprime_rel_err", r.sprime_rel_err},
          {"bad_log_lhs", r.bad_log_lhs},
          {"bad_log_rhs", r.bad_log_rhs},
          {"bad_rel_err", r.bad_rel_err},
          {"identities_ok", r.identities_ok},
          {"expectation_lower", r.expectation_lower},
          {"expectation_bound", r.expectation_bound},
          {"size_floor", r.size_floor},
          {"warnings", r.warnings}};
}

nlohmann::json drc_outcome_json(const DRCOutcome& o) {
  return {{"q", o.q},
          {"s_prime_size", o.s_prime_size},
          {"bad_count", o.bad_count},
          {"s_size", o.s_size},
          {"s_vertices", o.s_vertices},
          {"min_common_neighborhood", o.min_common_neighborhood},
          {"tuple_threshold", o.tuple_threshold},
          {"guarantee_exhaustive", o.guarantee_exhaustive},
          {"guarantee_ok", o.guarantee_ok},
          {"warnings", o.warnings}};
}

nlohmann::json drc_monte_carlo_json(const DRCMonteCarlo& m) {
  return {{"trials", m.trials},
          {"mean", m.mean},
          {"std_error", m.std_error},
          {"bound", m.bound},
          {"mean_plus_3se", m.mean + 3 * m.std_error}};
}

}  // namespace extremal::drc
