#pragma once

// Island-model evolution with power-law parent selection.
//
// Every island keeps an archive of (design, reward), capped at archive_size
// by evicting the worst. Per iteration and island, one parent is drawn with
// P(rank r) proportional to r^(-pw_alpha) (rank 1 = best) and the proposer
// emits batch_size children, which are clipped, evaluated and archived.
// Every migration_interval iterations the top migration_rate fraction of
// island i is copied into island (i + 1) mod k.
//
// The default proposer is an isotropic Gaussian around the parent with
// sigma = gaussian_scale (in unit-cube widths); with gaussian_decay the scale
// falls linearly to gaussian_final_scale * gaussian_scale at the last
// iteration.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "shapebench/optimizers/types.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

struct ArchiveEntry {
  std::vector<double> u;
  double reward;
};

/// Rank index (0 = best) drawn with probability proportional to (index + 1)^(-alpha).
inline std::size_t power_law_select(std::size_t n, double alpha, Rng& rng) {
  if (n == 0) throw ContractError("power_law_select: empty archive");
  double total = 0.0;
  for (std::size_t r = 1; r <= n; ++r) total += std::pow(static_cast<double>(r), -alpha);
  double x = rng.uniform() * total;
  for (std::size_t r = 1; r <= n; ++r) {
    x -= std::pow(static_cast<double>(r), -alpha);
    if (x < 0.0) return r - 1;
  }
  return n - 1;
}

/// Generates children of a parent. Replace to plug in other proposers.
class Proposer {
 public:
  virtual ~Proposer() = default;
  virtual std::vector<std::vector<double>> propose(const ArchiveEntry& parent, const std::vector<ArchiveEntry>& archive,
                                                   std::size_t count, double progress, Rng& rng) = 0;
  virtual Json describe() const = 0;
};

class GaussianProposer : public Proposer {
 public:
  GaussianProposer(double scale, bool decay, double final_scale)
      : scale_(scale), decay_(decay), final_scale_(final_scale) {}

  double sigma(double progress) const {
    if (!decay_) return scale_;
    return scale_ * (1.0 - (1.0 - final_scale_) * std::clamp(progress, 0.0, 1.0));
  }

  std::vector<std::vector<double>> propose(const ArchiveEntry& parent, const std::vector<ArchiveEntry>&,
                                           std::size_t count, double progress, Rng& rng) override {
    const double s = sigma(progress);
    std::vector<std::vector<double>> out(count, parent.u);
    for (auto& c : out) {
      for (auto& v : c) v = std::clamp(v + s * rng.normal(), 0.0, 1.0);
    }
    return out;
  }

  Json describe() const override {
    Json j;
    j["action"] = "gaussian";
    j["gaussian_scale"] = scale_;
    j["gaussian_decay"] = decay_;
    j["gaussian_final_scale"] = final_scale_;
    return j;
  }

 private:
  double scale_;
  bool decay_;
  double final_scale_;
};

struct EvolveOptions {
  int num_islands = 1;
  int migration_interval = 10;
  double migration_rate = 0.1;
  double pw_alpha = 3.0;
  int batch_size = 5;
  int archive_size = 100;
  double gaussian_scale = 0.1;
  bool gaussian_decay = true;
  double gaussian_final_scale = 0.1;

  static EvolveOptions resolve(const Json& o, Json& out) {
    EvolveOptions x;
    x.num_islands = take_option(o, out, "num_islands", x.num_islands);
    x.migration_interval = take_option(o, out, "migration_interval", x.migration_interval);
    x.migration_rate = take_option(o, out, "migration_rate", x.migration_rate);
    x.pw_alpha = take_option(o, out, "pw_alpha", x.pw_alpha);
    x.batch_size = take_option(o, out, "batch_size", x.batch_size);
    x.archive_size = take_option(o, out, "archive_size", x.archive_size);
    out["action"] = "gaussian";
    x.gaussian_scale = take_option(o, out, "gaussian_scale", x.gaussian_scale);
    x.gaussian_decay = take_option(o, out, "gaussian_decay", x.gaussian_decay);
    x.gaussian_final_scale = take_option(o, out, "gaussian_final_scale", x.gaussian_final_scale);
    if (o.contains("action") && o.at("action") != "gaussian") throw ConfigError("evolve: only action 'gaussian' is built in");
    reject_unknown_options(o, out, "evolve");
    require(x.num_islands >= 1, "evolve: num_islands must be >= 1");
    require(x.migration_interval >= 1, "evolve: migration_interval must be >= 1");
    require(x.migration_rate >= 0.0 && x.migration_rate <= 1.0, "evolve: migration_rate must lie in [0, 1]");
    require(x.pw_alpha >= 0.0, "evolve: pw_alpha must be >= 0");
    require(x.batch_size >= 1 && x.archive_size >= 1, "evolve: batch_size and archive_size must be >= 1");
    require(x.gaussian_scale > 0.0, "evolve: gaussian_scale must be > 0");
    require(x.gaussian_final_scale > 0.0 && x.gaussian_final_scale <= 1.0, "evolve: gaussian_final_scale must lie in (0, 1]");
    return x;
  }
};

class Evolve {
 public:
  Evolve(EvolveOptions opt, Rng rng, std::unique_ptr<Proposer> proposer = nullptr)
      : opt_(opt), rng_(std::move(rng)), proposer_(std::move(proposer)) {
    if (!proposer_) {
      proposer_ = std::make_unique<GaussianProposer>(opt_.gaussian_scale, opt_.gaussian_decay, opt_.gaussian_final_scale);
    }
  }

  void run(BudgetedObjective& obj, const std::vector<Observation>& seeds) {
    const auto k = static_cast<std::size_t>(opt_.num_islands);
    islands_.assign(k, {});
    for (std::size_t i = 0; i < seeds.size(); ++i) insert(islands_[i % k], {seeds[i].u, seeds[i].reward});
    const auto batch = static_cast<std::size_t>(opt_.batch_size);
    const double per_iter = static_cast<double>(batch * k);
    const double total_iters = std::max(1.0, std::ceil(static_cast<double>(obj.remaining()) / per_iter));
    const std::size_t d = obj.dim();
    for (std::size_t it = 0;; ++it) {
      const double progress = total_iters > 1.0 ? static_cast<double>(it) / (total_iters - 1.0) : 1.0;
      for (auto& island : islands_) {
        if (island.empty()) {
          // nothing to select from yet: seed with uniform samples
          for (std::size_t c = 0; c < batch; ++c) {
            std::vector<double> u(d);
            for (auto& v : u) v = rng_.uniform();
            insert(island, {u, obj(u)});
          }
          continue;
        }
        const std::size_t r = power_law_select(island.size(), opt_.pw_alpha, rng_);
        const ArchiveEntry parent = island[r];
        auto children = proposer_->propose(parent, island, batch, progress, rng_);
        for (auto& c : children) {
          const double f = obj(c);
          insert(island, {std::move(c), f});
        }
      }
      if (k > 1 && (it + 1) % static_cast<std::size_t>(opt_.migration_interval) == 0) migrate();
    }
  }

  const std::vector<std::vector<ArchiveEntry>>& islands() const { return islands_; }

  /// Copies the top migration_rate fraction of each island into the next one.
  void migrate() {
    const std::size_t k = islands_.size();
    if (k < 2) return;
    std::vector<std::vector<ArchiveEntry>> movers(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& isl = islands_[i];
      const auto m = static_cast<std::size_t>(std::ceil(opt_.migration_rate * static_cast<double>(isl.size())));
      movers[i].assign(isl.begin(), isl.begin() + static_cast<std::ptrdiff_t>(std::min(m, isl.size())));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (auto& e : movers[i]) insert(islands_[(i + 1) % k], e);
    }
  }

  /// Sorted insert (best first, stable for ties) with worst eviction.
  void insert(std::vector<ArchiveEntry>& island, ArchiveEntry e) const {
    auto pos = std::upper_bound(island.begin(), island.end(), e.reward,
                                [](double r, const ArchiveEntry& a) { return r > a.reward; });
    island.insert(pos, std::move(e));
    if (island.size() > static_cast<std::size_t>(opt_.archive_size)) island.pop_back();
  }

  const Proposer& proposer() const { return *proposer_; }

 private:
  EvolveOptions opt_;
  Rng rng_;
  std::unique_ptr<Proposer> proposer_;
  std::vector<std::vector<ArchiveEntry>> islands_;
};

}  // namespace shapebench
