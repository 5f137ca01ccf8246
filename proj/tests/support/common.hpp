#pragma once

#include <map>
#include <memory>
#include <string>

#include "plift/algebra.hpp"
#include "plift/fixtures.hpp"
#include "plift/module.hpp"
#include "plift/random.hpp"

namespace plift::test {

inline AlgebraPtr share(ArtinAlgebra a) { return std::make_shared<const ArtinAlgebra>(std::move(a)); }
inline QuiverPtr share(QuiverPresentation q) { return std::make_shared<const QuiverPresentation>(std::move(q)); }

inline MatrixK random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, XorShift64Star& rng) {
  MatrixK m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.element(f);
  return m;
}

inline RingElem random_element(const ArtinAlgebra& r, XorShift64Star& rng) {
  RingElem e = r.zero();
  for (auto& c : e.coeffs) c = rng.element(r.field());
  return e;
}

inline MatrixR random_matrix(const AlgebraPtr& r, std::size_t rows, std::size_t cols, XorShift64Star& rng) {
  MatrixR m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_element(*r, rng));
  return m;
}

// Fixture modules by name, cached per process.
inline const Instance& fixture_instance(const std::string& name) {
  static std::map<std::string, Instance> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, fixture(name)).first;
  return it->second;
}

inline ModulePtr fx_module(const std::string& inst, const std::string& name) {
  return fixture_instance(inst).module(name);
}

inline const LiftWitness& fx_lift(const std::string& inst, const std::string& name) {
  return fixture_instance(inst).lift(name).witness;
}

}  // namespace plift::test
