#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plift/decompose.hpp"
#include "plift/random.hpp"

namespace plift {

// Interval module over k on an A_n quiver whose arrow i joins vertices i and
// i+1 (either direction), supported on positions birth..death (1-based).
ModulePtr interval_module(const AlgebraPtr& k, const QuiverPtr& quiver, std::size_t birth, std::size_t death);

// A random invertible n x n matrix over k.
MatrixK random_invertible(const PrimeField& field, std::size_t n, XorShift64Star& rng);
// A random invertible matrix over R: random invertible residue plus random
// m-valued entries.
MatrixR random_invertible(const AlgebraPtr& algebra, std::size_t n, XorShift64Star& rng);

enum class AlgebraKind { Field, DualNumbers, Cubic, SquareZeroXY };
std::string to_string(AlgebraKind kind);
AlgebraPtr make_algebra(AlgebraKind kind, const PrimeField& field);

struct WitnessOptions {
  std::size_t max_vertices = 5;
  std::size_t max_intervals = 3;
  std::vector<std::uint32_t> primes = {2, 3, 5};
  std::vector<AlgebraKind> algebras = {AlgebraKind::Field, AlgebraKind::DualNumbers, AlgebraKind::Cubic,
                                       AlgebraKind::SquareZeroXY};
};

struct WitnessInstance {
  std::size_t index;
  std::uint64_t seed;
  std::string description;
  LiftWitness witness;
};

// A random interval sum over a randomly oriented A_n in a random basis, and a
// lift of it: the trivial lift with random m-valued perturbations of every
// arrow entry, conjugated by random invertible R-matrices P_x, with
// φ_x = residue(P_x)^{-1}. Deterministic in (seed, index).
WitnessInstance random_witness(std::uint64_t seed, std::size_t index, const WitnessOptions& options = {});

// Runs body(i) for i < count on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

struct InstanceOutcome {
  std::size_t index = 0;
  std::string description;
  bool lemma_ok = false;             // dim Hom_R(M,V) = dim End_k(V), Ψ∘Φ = id, Φ∘Ψ = id
  std::optional<bool> scalar_ok;     // only when End_k(V) = k: μ_{express_as_scalar(f)} = f, dim End_R(M) = ℓ(R)
  Verdict theorem = Verdict::Fail;   // verify_theorem
  std::size_t summands = 0;
  bool krull_schmidt_ok = false;     // same summand classes for seeds 1 and 2
  std::string detail;

  bool passed() const { return lemma_ok && scalar_ok.value_or(true) && theorem == Verdict::Pass && krull_schmidt_ok; }
};

bool check_lemma21(const LiftWitness& w, std::string* detail = nullptr);
bool check_express_as_scalar(const LiftWitness& w, std::string* detail = nullptr);

struct BatteryOptions {
  std::size_t count = 200;
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
  WitnessOptions witness;
};

// Outcomes in instance order regardless of jobs.
std::vector<InstanceOutcome> run_battery(const BatteryOptions& options);

}  // namespace plift
