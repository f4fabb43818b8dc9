#pragma once

/// @file sweep.hpp
/// @brief Cross-formula consistency sweep over all Y(n, q) up to a bound.
///
/// Work is split over (n, q) pairs across threads; results land in a slot
/// per pair, so the merged summary does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "cqs/cqs.hpp"

namespace cqs {

struct SweepOptions {
  long long max_n = 60;
  bool oracle = false;
  long long oracle_max_n = 20;
  std::size_t oracle_ray_bound = 20;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool keep_going = false;
};

struct Mismatch {
  long long n = 0;
  long long q = 0;
  std::string chain;  // "1,2,2,1", empty when not tied to a chain
  std::string what;

  /// "(n q k-chain) what"
  std::string repro() const {
    std::ostringstream os;
    os << "(" << n << " " << q << " " << (chain.empty() ? "-" : chain) << ") " << what;
    return os.str();
  }

  friend bool operator<(const Mismatch& a, const Mismatch& b) {
    return std::tie(a.n, a.q, a.chain, a.what) < std::tie(b.n, b.q, b.chain, b.what);
  }
};

struct PairResult {
  long long n = 0;
  long long q = 0;
  std::size_t components = 0;
  bool oracle_checked = false;
  std::size_t oracle_fans = 0;
  std::vector<Mismatch> mismatches;
};

struct SweepSummary {
  std::size_t singularities = 0;
  std::size_t components = 0;
  std::size_t max_components = 0;
  std::pair<long long, long long> max_components_at{0, 0};
  std::size_t oracle_singularities = 0;
  std::size_t oracle_fans = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Coprime (n, q) with 2 <= n <= max_n and 0 < q < n - 1.
inline std::vector<std::pair<long long, long long>> sweep_pairs(long long max_n) {
  std::vector<std::pair<long long, long long>> out;
  for (long long n = 2; n <= max_n; ++n)
    for (long long q = 1; q < n - 1; ++q)
      if (std::gcd(n, q) == 1) out.emplace_back(n, q);
  return out;
}

namespace detail {

struct PairChecker {
  PairResult& res;

  void fail(const std::string& chain, const std::string& what) {
    res.mismatches.push_back({res.n, res.q, chain, what});
  }
  void expect(bool cond, const std::string& chain, const std::string& what) {
    if (!cond) fail(chain, what);
  }
  template <class A, class B>
  void expect_eq(const A& lhs, const B& rhs, const std::string& chain, const std::string& what) {
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << what << ": " << lhs << " != " << rhs;
      fail(chain, os.str());
    }
  }
};

struct ComponentValues {
  std::vector<Int> k;
  Int milnor;
  Int dim;
};

inline std::vector<std::pair<Int, Int>> invariant_multiset(const std::vector<ComponentValues>& cs) {
  std::vector<std::pair<Int, Int>> out;
  for (const ComponentValues& c : cs) out.emplace_back(c.milnor, c.dim);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ComponentValues> quick_components(const NormalForm& nf) {
  std::vector<ComponentValues> out;
  for (const KChain& c : enumerate_KY(nf.a_chain)) {
    Fan fan = build_sigma_k(nf, c);
    out.push_back({c.k, milnor_toric(fan), dim_toric(nf, fan)});
  }
  return out;
}

inline void check_pair_body(const SweepOptions& opts, PairChecker& chk) {
  PairResult& res = chk.res;
  const NormalForm nf = normal_form(res.n, res.q);
  const std::vector<NVec> v = v_rays(nf);
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    chk.expect_eq(det(v[i - 1], v[i + 1]), nf.b_chain[i - 1], "", "det(v^{i-1}, v^{i+1}) vs b_i");
  const Int nu_value = nu(nf);
  const Int r_value = r(nf);
  const Int h1 = h1_theta(nf);
  chk.expect_eq(nu_value, sum(nf.b_chain.coefficients), "", "nu vs sum b_i");
  chk.expect_eq(h1, nu_value - r_value, "", "h1_theta vs nu - r");

  const std::vector<Int> artin = rdp_chain(nf.a_chain.size());
  const std::vector<KChain> chains = enumerate_KY(nf.a_chain);
  res.components = chains.size();
  chk.expect(std::is_sorted(chains.begin(), chains.end()), "", "chains not in lexicographic order");
  chk.expect(std::any_of(chains.begin(), chains.end(), [&](const KChain& c) { return c.k == artin; }),
             "", "Artin chain missing from K(Y)");

  const SingularityClass whole = classify_cone(nf.first(), nf.last());
  bool has_identity = false;
  std::vector<Fan> fans;
  std::vector<ComponentValues> values;
  Int artin_dim = -1;

  for (const KChain& c : chains) {
    const std::string tag = join(c.k);
    std::optional<Rat> cf = cf_eval(c.k);
    chk.expect(cf && *cf == Rat(0), tag, "rational evaluation of the chain is not 0");

    Fan fan = build_sigma_k(nf, c);
    ValidationReport rep = validate_presolution(fan);
    chk.expect(rep.ok, tag, "fan fails validation: " + rep.message);
    std::size_t positive = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (nf.a_chain[j] > c.k[j]) ++positive;
    chk.expect_eq(fan.cones.size(), positive, tag, "cone count vs #{a_i > k_i}");
    Int ratio_sum = 0;
    for (const FanCone& cone : fan.cones) {
      chk.expect(cone.roof.l % cone.roof.h == 0, tag, "l/h not integral");
      ratio_sum += cone.roof.l / cone.roof.h;
    }

    const Int mt = milnor_toric(fan);
    const Int ms = milnor_stevens(nf, c);
    const Int dt = dim_toric(nf, fan);
    const Int ds = dim_stevens(nf, c);
    chk.expect_eq(mt, ms, tag, "milnor toric vs stevens");
    chk.expect_eq(dt, ds, tag, "dim toric vs stevens");
    chk.expect_eq(dt, h1 + 2 * mt - 2 * r_value, tag, "dim vs h1 + 2 milnor - 2r");
    chk.expect_eq(count_unit_q(c), nu_value - 3 * r_value - 2 + ratio_sum, tag,
                  "unit-q count vs nu - 3r - 2 + sum(a_i - k_i)");
    if (c.k == artin) {
      artin_dim = dt;
      chk.expect(rdp_fan(nf) == fan, tag, "rdp_fan differs from Sigma_k of the Artin chain");
    }
    if (fan.rays.size() == 2) has_identity = true;
    values.push_back({c.k, mt, dt});
    fans.push_back(std::move(fan));
  }

  for (std::size_t i = 0; i < fans.size(); ++i) {
    chk.expect(values[i].dim <= artin_dim, join(values[i].k), "dimension exceeds the Artin component");
    for (std::size_t j = 0; j < fans.size(); ++j)
      chk.expect_eq(dim_difference(fans[i], fans[j]), values[i].dim - values[j].dim,
                    join(values[i].k) + "|" + join(values[j].k), "fan dimension difference");
  }
  chk.expect_eq(has_identity, whole.tag == ClassTag::T || whole.tag == ClassTag::DuValA, "",
                "identity P-resolution iff Y is a T-singularity");

  // The assembled table enforces the same identities; it must not throw.
  SingularityReport table = component_table(nf);
  chk.expect_eq(table.components.size(), chains.size(), "", "component_table size");

  // Duality: (n, q^{-1}) has the reversed chains and the same invariants.
  const NormalForm dual = normal_form(nf.n, nf.dual_q);
  std::vector<ComponentValues> dual_values = quick_components(dual);
  std::vector<std::vector<Int>> reversed, dual_chains;
  for (const ComponentValues& c : values) reversed.emplace_back(c.k.rbegin(), c.k.rend());
  for (const ComponentValues& c : dual_values) dual_chains.push_back(c.k);
  std::sort(reversed.begin(), reversed.end());
  std::sort(dual_chains.begin(), dual_chains.end());
  chk.expect(reversed == dual_chains, "", "dual singularity chains are not the reversed chains");
  chk.expect(invariant_multiset(values) == invariant_multiset(dual_values), "",
             "dual singularity has different (milnor, dim) multiset");

  if (opts.oracle && res.n <= opts.oracle_max_n) {
    std::vector<Fan> brute = brute_force_presolutions(nf, opts.oracle_ray_bound);
    std::vector<Fan> sorted = fans;
    std::sort(sorted.begin(), sorted.end(), [](const Fan& x, const Fan& y) { return x.rays < y.rays; });
    res.oracle_checked = true;
    res.oracle_fans = brute.size();
    chk.expect(brute == sorted, "", "brute-force P-resolutions differ from chain fans (" +
                                        std::to_string(brute.size()) + " vs " +
                                        std::to_string(sorted.size()) + ")");
  }
}

}  // namespace detail

/// Runs every invariant for one singularity; failures become mismatches.
inline PairResult check_singularity(long long n, long long q, const SweepOptions& opts = {}) {
  PairResult res;
  res.n = n;
  res.q = q;
  detail::PairChecker chk{res};
  try {
    detail::check_pair_body(opts, chk);
  } catch (const std::exception& e) {
    chk.fail("", std::string("exception: ") + e.what());
  }
  return res;
}

inline SweepSummary run_sweep(const SweepOptions& opts) {
  const auto pairs = sweep_pairs(opts.max_n);
  std::vector<PairResult> results(pairs.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, pairs.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      if (stop.load()) break;
      results[i] = check_singularity(pairs[i].first, pairs[i].second, opts);
      if (!results[i].mismatches.empty() && !opts.keep_going) stop.store(true);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SweepSummary sum;
  for (const PairResult& pr : results) {
    if (pr.n == 0) continue;  // skipped after an early stop
    ++sum.singularities;
    sum.components += pr.components;
    if (pr.components > sum.max_components) {
      sum.max_components = pr.components;
      sum.max_components_at = {pr.n, pr.q};
    }
    if (pr.oracle_checked) {
      ++sum.oracle_singularities;
      sum.oracle_fans += pr.oracle_fans;
    }
    sum.mismatches.insert(sum.mismatches.end(), pr.mismatches.begin(), pr.mismatches.end());
  }
  std::sort(sum.mismatches.begin(), sum.mismatches.end());
  return sum;
}

}  // namespace cqs
