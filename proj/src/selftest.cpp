#include "mobius/selftest.hpp"

#include <chrono>
#include <functional>

#include "mobius/catalog.hpp"
#include "mobius/parallel.hpp"
#include "mobius/random.hpp"

namespace mobius {

bool SelftestReport::passed() const {
  for (const auto& b : batteries)
    if (!b.ok()) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

// Returns "" on success, otherwise a description of the failing instance.
using Instance = std::function<std::string(std::size_t index)>;

BatteryResult run_battery(const std::string& name, std::size_t count, std::size_t jobs, const Instance& instance) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> outcome(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      outcome[i] = instance(i);
    } catch (const std::exception& e) {
      outcome[i] = std::string("exception: ") + e.what();
    }
  });
  BatteryResult r;
  r.name = name;
  r.total = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (outcome[i].empty()) {
      ++r.passed;
    } else if (r.failures.size() < kMaxRecordedFailures) {
      r.failures.push_back("#" + std::to_string(i) + ": " + outcome[i]);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t pick_size(SplitMix64& rng, std::size_t max) { return static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max))); }

std::string check_mobius(SplitMix64& rng) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 8)));
  auto mu = mobius_recursive(p);
  if (!(mobius_hall(p) == mu)) return "Hall and recursive Möbius functions differ on " + p->describe();
  auto one = identity_one(p);
  if (!(convolve(zeta(p), mu) == one) || !(convolve(mu, zeta(p)) == one)) return "mu is not the inverse of zeta";
  return {};
}

std::string check_inversion(SplitMix64& rng) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 8)));
  GrFunction f = random_gr_function(p, rng, -5, 5);
  GrFunction up = upper_inversion(f), down = lower_inversion(f);
  for (Element a = 0; a < p->size(); ++a) {
    Integer above = 0, below = 0;
    for (Element b : from_mask(p->up_set(a))) above += up(b);
    for (Element b : from_mask(p->down_set(a))) below += down(b);
    if (above != f(a)) return "upper inversion identity fails at " + p->name(a);
    if (below != f(a)) return "lower inversion identity fails at " + p->name(a);
  }
  return {};
}

std::string check_euler(SplitMix64& rng, FieldSpec field) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 7)));
  PosetModule n = random_module(p, field, 4, rng.next());
  for (const auto& item : euler_check(n))
    if (!item.ok)
      return "inversion " + item.inversion.get_str() + " != euler " + item.euler.get_str() + " at " +
             p->name(item.element);
  for (Element a = 0; a < p->size(); ++a) {
    CochainComplex c = hom_complex({a}, n);
    if (!c.is_complex()) return "coboundary does not square to zero at " + p->name(a);
    if (cohomology(c).betti.front() != nat_space(indicator(p, {a}, field), n).dimension)
      return "degree-0 cohomology differs from Nat(1_a, N) at " + p->name(a);
  }
  return {};
}

std::string check_euler_indicator(SplitMix64& rng) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 7)));
  PosetModule n = random_module(p, {}, 3, rng.next());
  ElementSet z = random_spread(*p, rng);
  CochainComplex c = hom_complex(z, n);
  if (!c.is_complex()) return "coboundary does not square to zero";
  Integer computed = cohomology(c).euler;
  Integer formula = euler_chain_sum(z, n);
  if (computed != formula) return "chi " + computed.get_str() + " != chain sum " + formula.get_str();
  return {};
}

std::string check_resolution(SplitMix64& rng) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 5)));
  PosetModule n = random_module(p, {}, 3, rng.next());
  auto report = check_resolution_exact(n);
  if (!report.ok) return report.reason + " at " + p->name(*report.element) + ", degree " + std::to_string(*report.degree);
  return {};
}

std::string check_adjunction(SplitMix64& rng) {
  PosetPtr p = share(random_poset(rng, pick_size(rng, 5)));
  PosetPtr q = share(random_poset(rng, pick_size(rng, 5)));
  MonotoneMap f = random_monotone_map(rng, p, q);
  PosetModule m = random_module(p, {}, 3, rng.next());
  PosetModule n = random_module(q, {}, 3, rng.next());
  auto report = adjunction_dim_check(f, m, n);
  for (const auto& item : report.items)
    if (!item.equal) return item.label + ": " + item.lhs + " != " + item.rhs;
  return {};
}

std::string first_failure(const CheckReport& report) {
  for (const auto& item : report.items)
    if (!item.equal) return item.label + ": " + item.lhs + " != " + item.rhs;
  return {};
}

struct CatalogConnection {
  std::string label;
  GaloisConnection connection;
};

std::vector<CatalogConnection> catalog_connections() {
  std::vector<CatalogConnection> out;
  auto catalog = poset_catalog();
  for (const auto& [pname, p] : catalog)
    for (const auto& [qname, q] : catalog) {
      auto connections = enumerate_connections(p, q);
      for (std::size_t i = 0; i < connections.size(); ++i)
        out.push_back({pname + "->" + qname + "#" + std::to_string(i), std::move(connections[i])});
    }
  return out;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  if (options.trials == 0) return report;

  SplitMix64 root(options.seed);
  std::vector<std::uint64_t> trial_seeds(options.trials);
  for (auto& s : trial_seeds) s = root.next();

  // Battery k of trial t draws from its own stream so batteries are independent.
  auto stream = [&](std::size_t battery, std::size_t t) {
    return SplitMix64(trial_seeds[t] ^ (0xA24BAED4963EE407ULL * (battery + 1)));
  };
  const std::size_t trials = options.trials, jobs = options.jobs;

  auto per_trial = [&](const std::string& name, std::size_t battery, auto check) {
    report.batteries.push_back(run_battery(name, trials, jobs, [&](std::size_t t) {
      SplitMix64 rng = stream(battery, t);
      return check(rng);
    }));
  };
  per_trial("mobius-oracle", 0, check_mobius);
  per_trial("inversion-identity", 1, check_inversion);
  per_trial("euler-check-QQ", 2, [](SplitMix64& rng) { return check_euler(rng, FieldSpec::rationals()); });
  per_trial("euler-check-GF7", 3, [](SplitMix64& rng) { return check_euler(rng, FieldSpec::prime(7)); });
  per_trial("euler-indicator", 4, check_euler_indicator);
  per_trial("resolution-exact", 5, check_resolution);
  per_trial("adjunction-dims", 6, check_adjunction);

  const auto connections = catalog_connections();
  const std::size_t count = connections.size();
  SplitMix64 catalog_root(options.seed ^ 0xC0FFEEULL);
  std::vector<std::uint64_t> catalog_seeds(count);
  for (auto& s : catalog_seeds) s = catalog_root.next();

  report.batteries.push_back(run_battery("rota-classical", count, jobs, [&](std::size_t i) {
    auto r = first_failure(rota_classical_check(connections[i].connection));
    return r.empty() ? r : connections[i].label + " " + r;
  }));
  report.batteries.push_back(run_battery("rota-inversion", count, jobs, [&](std::size_t i) {
    const auto& c = connections[i].connection;
    SplitMix64 rng(catalog_seeds[i]);
    for (int k = 0; k < 20; ++k) {
      auto r = first_failure(rota_inversion_check(c, random_gr_function(c.right().source_ptr(), rng, -5, 5)));
      if (!r.empty()) return connections[i].label + " " + r;
    }
    return std::string{};
  }));
  report.batteries.push_back(run_battery("rota-ext", count, jobs, [&](std::size_t i) {
    const auto& c = connections[i].connection;
    SplitMix64 rng(catalog_seeds[i] ^ 1);
    for (int k = 0; k < 5; ++k) {
      PosetModule n = random_module(c.right().source_ptr(), {}, 3, rng.next());
      for (Element a = 0; a < c.source().size(); ++a) {
        auto r = first_failure(rota_ext_check(c, n, a));
        if (!r.empty()) return connections[i].label + " " + r;
      }
    }
    return std::string{};
  }));
  report.batteries.push_back(run_battery("functor-equalities", count, jobs, [&](std::size_t i) {
    const auto& c = connections[i].connection;
    SplitMix64 rng(catalog_seeds[i] ^ 2);
    for (int k = 0; k < 5; ++k) {
      PosetModule n = random_module(c.right().source_ptr(), {}, 3, rng.next());
      PosetModule m = random_module(c.left().source_ptr(), {}, 3, rng.next());
      auto r = first_failure(check_functor_equalities(c, n, m));
      if (!r.empty()) return connections[i].label + " " + r;
    }
    return std::string{};
  }));
  return report;
}

io::Json selftest_to_json(const SelftestReport& report, bool with_timings) {
  io::Json j;
  j["command"] = "selftest";
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["status"] = report.passed() ? "pass" : "fail";
  io::Json items = io::Json::array();
  for (const auto& b : report.batteries) {
    io::Json item{{"label", b.name}, {"lhs", b.passed}, {"rhs", b.total}, {"equal", b.ok()}};
    if (!b.failures.empty()) item["failures"] = b.failures;
    if (with_timings) item["seconds"] = b.seconds;
    items.push_back(item);
  }
  j["items"] = items;
  return j;
}

}  // namespace mobius
