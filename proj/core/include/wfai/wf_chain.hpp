#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wfai/random.hpp"

namespace wfai {

// Number of A alleles in a haploid population, 0 <= count <= N.
using AlleleCount = std::int64_t;

// Parameters of the haploid two-allele Wright-Fisher chain.
struct WfParams {
  std::int64_t n_pop = 2;      // population size N
  double sel = 0.0;            // selection coefficient s on allele A
  double mu_a_to_small = 0.0;  // mutation probability A -> a
  double mu_small_to_a = 0.0;  // mutation probability a -> A

  static WfParams neutral(std::int64_t n) { return {n, 0.0, 0.0, 0.0}; }
  static WfParams selection(std::int64_t n, double s) { return {n, s, 0.0, 0.0}; }

  // Throws InvalidParameter unless N >= 2, s > -1 and both mutation
  // probabilities lie in [0, 1].
  void validate() const;

  bool mutation_free() const {
    return mu_a_to_small == 0.0 && mu_small_to_a == 0.0;
  }
  // Allele count 0 is absorbing iff no a -> A mutation; N iff no A -> a.
  bool zero_absorbing() const { return mu_small_to_a == 0.0; }
  bool full_absorbing() const { return mu_a_to_small == 0.0; }

  // Throws InvalidParameter if i is outside [0, N].
  void check_count(AlleleCount i) const;
};

// A probability distribution over allele counts {0, ..., N}.
class ProbVector {
 public:
  // Throws InvalidParameter if any weight is negative or the weights do not
  // sum to 1 within 1e-12.
  explicit ProbVector(std::vector<double> weights);

  std::span<const double> weights() const { return weights_; }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::size_t size() const { return weights_.size(); }

  // Shannon entropy in nats.
  double entropy() const;

 private:
  std::vector<double> weights_;
};

struct SamplingProbs {
  double big_a;    // P[A is sampled]
  double small_a;  // P[a is sampled]
};

// Selection-only sampling probabilities; mutation fields are ignored.
SamplingProbs selection_sampling_probs(const WfParams& params, AlleleCount i);

// Unnormalized offspring-type weights over the common denominator
// i(1+s) + N - i: theta_i = big_a / total, 1 - theta_i = small_a / total.
struct OffspringWeights {
  double big_a;
  double small_a;
  double total;
};
OffspringWeights offspring_weights(const WfParams& params, AlleleCount i);

// Expected proportion of A offspring under selection and mutation:
//   theta_i = (i(1+s)(1-mu1) + (N-i) mu2) / (i(1+s) + N - i)
double theta(const WfParams& params, AlleleCount i);

// 1 - theta_i without subtracting.
double theta_complement(const WfParams& params, AlleleCount i);

// Bin(N, theta_i) probabilities of moving from i to j.
double log_transition_prob(const WfParams& params, AlleleCount i, AlleleCount j);
double transition_prob(const WfParams& params, AlleleCount i, AlleleCount j);
ProbVector transition_row(const WfParams& params, AlleleCount i);

// Uniform law on {1, ..., N-1}: both alleles are present at time 0, so the
// boundary states carry no weight. This is an initial law only.
ProbVector maxent_initial(std::int64_t n_pop);

// One generation: a Bin(N, theta_i) draw.
AlleleCount step(const WfParams& params, AlleleCount i, RandomStream& rng);

// Default generation cap for forward simulation: 20 N.
std::int64_t default_max_gens(const WfParams& params);

struct Absorption {
  std::int64_t generation;
  AlleleCount state;  // 0 or N
};

struct Trajectory {
  std::vector<AlleleCount> counts;  // counts[g] is the state at generation g
  std::optional<Absorption> absorbed_at;
  WfParams params;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

// Runs the chain for at most max_gens generations from i0. With
// stop_on_absorption the run ends at the first visit to an absorbing state
// (0 when mu2 = 0, N when mu1 = 0), which is recorded in absorbed_at.
Trajectory simulate(const WfParams& params, AlleleCount i0,
                    std::int64_t max_gens, RandomStream& rng,
                    bool stop_on_absorption = true);

}  // namespace wfai
