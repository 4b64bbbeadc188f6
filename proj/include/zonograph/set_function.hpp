#pragma once

#include <optional>
#include <vector>

#include "zonograph/graph.hpp"
#include "zonograph/rational.hpp"
#include "zonograph/subset.hpp"

namespace zonograph {

// A set function on 2^N with f(empty) = 0, stored as a full table of
// 2^(n+1) values. Cut functions are the symmetric members of this class.
class SetFunction {
 public:
  explicit SetFunction(int n);
  SetFunction(int n, std::vector<Rational> table);

  int n() const { return n_; }
  Mask universe() const { return full_mask(n_); }
  const Rational& value(Mask s) const;
  void set_value(Mask s, Rational v);

  /// f(S) == f(complement) for all S, and f(N) == 0.
  bool is_symmetric() const;

 private:
  int n_;
  std::vector<Rational> table_;
};

/// The cut function of a weighted graph: sum of weights crossing S.
SetFunction cut_function(const Graph& g);

/// Indicator of the single edge (i,j) crossing the cut; an extreme ray of
/// the cut cone.
SetFunction edge_indicator_function(int n, int i, int j);

struct SubmodularityWitness {
  Mask s = 0;
  Mask t = 0;
};

/// First violating pair of f(S)+f(T) >= f(S&T)+f(S|T), if any.
std::optional<SubmodularityWitness> submodularity_violation(const SetFunction& f);

bool is_submodular(const SetFunction& f);

/// f(S) == sum of f({i}) over i in S for every S in the domain
/// (default domain: all subsets of N - {0}).
bool is_modular(const SetFunction& f,
                const std::optional<std::vector<Mask>>& domain = std::nullopt);

/// Recovered weights b_ij = (f(i)+f(j)-f(ij))/2 for all pairs, zeros kept.
/// A negative entry means f violates a facet inequality of the cut cone.
std::vector<Edge> weights_from_beta(const SetFunction& f);

/// Graph whose cut function is f; throws when some recovered weight is
/// negative or the roundtrip fails (f not a cut function).
Graph graph_from_beta(const SetFunction& f);

SetFunction add(const SetFunction& f1, const SetFunction& f2);
SetFunction scale(const SetFunction& f, const Rational& c);

struct SimpleEqualityResult {
  enum class Status { kDecomposed, kMinimalCut, kIndecomposable };
  Status status = Status::kMinimalCut;
  Mask part1 = 0;              // decomposition parts (of S, or of its
  Mask part2 = 0;              // complement when on_complement is set)
  bool on_complement = false;
  bool equality_holds = false; // f(part1 | part2) == f(part1) + f(part2)
};

/// Splits a non-minimal cut into two disjoint cuts and verifies the
/// resulting additivity of f; reports minimality otherwise.
SimpleEqualityResult simple_equality(const SetFunction& f, const Graph& g, Mask s);

bool simple_equality_holds(const SetFunction& f, const Graph& g, Mask s);

}  // namespace zonograph
