#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pyramid/errors.hpp"

namespace pyramid {

// Block-detained probabilities p_2, p_3, ..., p_K with p_K = 1.  The cutoff K
// makes every per-level phase space exactly finite: once the dishonest branch
// leads by K it pegs with probability one, so larger leads are unreachable.
class DetainSchedule {
 public:
  DetainSchedule() : probs_{1.0} {}
  explicit DetainSchedule(std::vector<double> probs) : probs_(std::move(probs)) {}

  int cutoff() const { return static_cast<int>(probs_.size()) + 1; }
  const std::vector<double>& probs() const { return probs_; }

  // Total query: defined for every lead k >= 2, returns 1 beyond the cutoff.
  double prob(int lead) const {
    if (lead < 2) return 0.0;  // pegging needs a two-block lead
    if (lead >= cutoff()) return 1.0;
    return probs_[static_cast<std::size_t>(lead - 2)];
  }

 private:
  std::vector<double> probs_;
};

struct ModelParams {
  double alpha_tilde = 10.0;     // net dishonest mining rate
  double beta = 28.0;            // net honest mining rate
  double gamma = 5.0;            // jumping miners' rate
  double efficiency_ratio = 0.5; // dishonest efficiency gain
  double mu = 3.0;               // block-pegged / orphan-return rate
  DetainSchedule detain{{0.9, 1.0}};
  double block_reward = 0.5;
  double fee = 0.5;
  double electric_price = 0.5;
  double admin_price = 0.5;
};

// Effective rates entering the generator: a = (alpha~+gamma)(1+R), b = beta-gamma,
// and the detained-state total rates xi_k = a(1-p_k) + b + mu p_k for k >= 2.
struct DerivedRates {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> xi;  // xi[k-2] holds xi_k, k = 2..K

  double xi_at(int lead) const { return xi[static_cast<std::size_t>(lead - 2)]; }
};

// Level cutoff for dense oracle solves and simulators; the matrix-geometric
// path never truncates the level dimension.
struct TruncationConfig {
  int max_level = 60;
  double tail_tol = 1e-9;
};

class ValidatedParams {
 public:
  const ModelParams& get() const { return p_; }
  const ModelParams* operator->() const { return &p_; }

 private:
  friend ValidatedParams validate(const ModelParams&);
  explicit ValidatedParams(ModelParams p) : p_(std::move(p)) {}
  ModelParams p_;
};

// Checks every constraint and reports all violations at once.
inline ValidatedParams validate(const ModelParams& p) {
  std::vector<std::string> bad;
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      bad.push_back(std::string("NonPositiveRate: ") + name + " must be > 0");
  };
  auto nonneg = [&](double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
      bad.push_back(std::string("NonPositiveRate: ") + name + " must be >= 0");
  };
  positive(p.alpha_tilde, "alpha_tilde");
  positive(p.beta, "beta");
  positive(p.mu, "mu");
  nonneg(p.efficiency_ratio, "efficiency_ratio");
  nonneg(p.block_reward, "block_reward");
  nonneg(p.fee, "fee");
  nonneg(p.electric_price, "electric_price");
  nonneg(p.admin_price, "admin_price");

  if (!(p.alpha_tilde < p.beta))
    bad.push_back("GammaOutOfRange: alpha_tilde < beta is required (honest majority)");
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma)) {
    bad.push_back("GammaOutOfRange: gamma must be >= 0");
  } else if (!(p.gamma < 0.5 * (p.beta - p.alpha_tilde))) {
    bad.push_back("GammaOutOfRange: gamma must be < (beta - alpha_tilde)/2, strictly");
  }

  const auto& probs = p.detain.probs();
  if (probs.empty()) {
    bad.push_back("BadDetainSchedule: schedule must contain p_2..p_K");
  } else {
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!(probs[i] >= 0.0 && probs[i] <= 1.0))
        bad.push_back("BadDetainSchedule: p_" + std::to_string(i + 2) + " outside [0,1]");
    }
    if (probs.back() != 1.0)
      bad.push_back("BadDetainSchedule: p_K must equal 1 exactly");
  }

  if (!bad.empty()) throw ValidationError(std::move(bad));
  return ValidatedParams(p);
}

inline DerivedRates derive_rates(const ValidatedParams& vp) {
  const ModelParams& p = vp.get();
  DerivedRates d;
  d.a = (p.alpha_tilde + p.gamma) * (1.0 + p.efficiency_ratio);
  d.b = p.beta - p.gamma;
  const int K = p.detain.cutoff();
  d.xi.reserve(static_cast<std::size_t>(K - 1));
  for (int k = 2; k <= K; ++k) {
    const double pk = p.detain.prob(k);
    d.xi.push_back(d.a * (1.0 - pk) + d.b + p.mu * pk);
  }
  return d;
}

}  // namespace pyramid
