#pragma once

// Exhaustive generation of finite topologies and corpus-wide cross-checks of
// the separation-axiom deciders.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liftprop/finspace.hpp"

namespace liftprop {

inline constexpr std::size_t kMaxEnumerationPoints = 6;

// Point names used by the generator: p0, p1, ...
std::vector<std::string> corpus_point_names(std::size_t n);

// Every preorder on n labeled points, exactly once, in a deterministic order.
// With dedupe, only the first space of each homeomorphism class is kept.
// Throws DomainError for n > kMaxEnumerationPoints.
std::vector<FinSpace> all_spaces(std::size_t n, bool dedupe = false);

enum class Axiom { kNormal, kHereditarilyNormal };

std::string to_string(Axiom a);
Axiom parse_axiom(const std::string& s);

struct Mismatch {
  std::size_t index;  // position in the corpus
  FinSpace space;
  Axiom axiom;
  std::map<std::string, bool> verdicts;  // method -> verdict
};

struct CorpusReport {
  std::size_t n = 0;
  bool deduped = false;
  std::size_t total_labeled = 0;
  std::size_t total_unlabeled = 0;  // filled in when deduped
  // axiom -> method -> number of spaces with a true verdict
  std::map<std::string, std::map<std::string, std::size_t>> per_axiom;
  std::vector<Mismatch> mismatches;  // sorted by index
};

struct CrossValidateOptions {
  bool dedupe = false;
  unsigned jobs = 1;
};

// Throws DomainError for n > 5.
CorpusReport cross_validate(std::size_t n, const std::vector<Axiom>& axioms,
                            const CrossValidateOptions& options = {});

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace liftprop
