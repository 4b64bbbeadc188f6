#include "zonograph/set_function.hpp"

#include <stdexcept>

#include "zonograph/roots.hpp"

namespace zonograph {

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("set function: n out of range");
  table_.assign(std::size_t{1} << (n + 1), Rational(0));
}

SetFunction::SetFunction(int n, std::vector<Rational> table) : n_(n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("set function: n out of range");
  if (table.size() != (std::size_t{1} << (n + 1)))
    throw std::invalid_argument("set function: table size mismatch");
  if (table[0] != 0)
    throw std::invalid_argument("set function: f(empty) must be 0");
  table_ = std::move(table);
}

const Rational& SetFunction::value(Mask s) const {
  if (s >= table_.size()) throw std::invalid_argument("set function: mask out of range");
  return table_[s];
}

void SetFunction::set_value(Mask s, Rational v) {
  if (s >= table_.size()) throw std::invalid_argument("set function: mask out of range");
  if (s == 0 && v != 0) throw std::invalid_argument("set function: f(empty) must be 0");
  table_[s] = std::move(v);
}

bool SetFunction::is_symmetric() const {
  const Mask all = universe();
  if (table_[all] != 0) return false;
  for (Mask s = 0; s <= all; ++s)
    if (table_[s] != table_[mask_complement(s, n_)]) return false;
  return true;
}

SetFunction cut_function(const Graph& g) {
  SetFunction f(g.n());
  const Mask all = full_mask(g.n());
  for (Mask s = 1; s < all; ++s) {
    Rational acc(0);
    for (const auto& e : g.edges())
      if (mask_contains(s, e.i) != mask_contains(s, e.j)) acc += e.b;
    f.set_value(s, std::move(acc));
  }
  return f;
}

SetFunction edge_indicator_function(int n, int i, int j) {
  if (!(0 <= i && i < j && j <= n))
    throw std::invalid_argument("edge indicator: need 0 <= i < j <= n");
  SetFunction f(n);
  for (Mask s = 1; s < full_mask(n); ++s)
    f.set_value(s, Rational(edge_cut_indicator(i, j, s)));
  return f;
}

std::optional<SubmodularityWitness> submodularity_violation(const SetFunction& f) {
  const Mask all = f.universe();
  for (Mask s = 0; s <= all; ++s)
    for (Mask t = s + 1; t <= all; ++t)
      if (f.value(s) + f.value(t) < f.value(s & t) + f.value(s | t))
        return SubmodularityWitness{s, t};
  return std::nullopt;
}

bool is_submodular(const SetFunction& f) {
  return !submodularity_violation(f).has_value();
}

bool is_modular(const SetFunction& f,
                const std::optional<std::vector<Mask>>& domain) {
  std::vector<Mask> masks;
  if (domain) {
    masks = *domain;
  } else {
    for (Mask s = 0; s <= f.universe(); ++s)
      if (!mask_contains(s, 0)) masks.push_back(s);
  }
  for (Mask s : masks) {
    Rational sum(0);
    for (int i : mask_elements(s)) sum += f.value(Mask{1} << i);
    if (f.value(s) != sum) return false;
  }
  return true;
}

std::vector<Edge> weights_from_beta(const SetFunction& f) {
  std::vector<Edge> out;
  for (int i = 0; i <= f.n(); ++i)
    for (int j = i + 1; j <= f.n(); ++j) {
      Rational b = (f.value(Mask{1} << i) + f.value(Mask{1} << j) -
                    f.value((Mask{1} << i) | (Mask{1} << j))) /
                   2;
      out.push_back({i, j, std::move(b)});
    }
  return out;
}

Graph graph_from_beta(const SetFunction& f) {
  auto table = weights_from_beta(f);
  for (const auto& e : table)
    if (e.b < 0)
      throw std::invalid_argument(
          "graph_from_beta: negative recovered weight; outside the cut cone");
  Graph g(f.n(), std::move(table));
  // The pairwise recovery alone does not certify f; require the roundtrip.
  auto fg = cut_function(g);
  for (Mask s = 0; s <= f.universe(); ++s)
    if (fg.value(s) != f.value(s))
      throw std::invalid_argument("graph_from_beta: f is not a cut function");
  return g;
}

SetFunction add(const SetFunction& f1, const SetFunction& f2) {
  if (f1.n() != f2.n()) throw std::invalid_argument("add: dimension mismatch");
  SetFunction out(f1.n());
  for (Mask s = 1; s <= f1.universe(); ++s)
    out.set_value(s, f1.value(s) + f2.value(s));
  return out;
}

SetFunction scale(const SetFunction& f, const Rational& c) {
  if (c < 0) throw std::invalid_argument("scale: factor must be nonnegative");
  SetFunction out(f.n());
  for (Mask s = 1; s <= f.universe(); ++s) out.set_value(s, c * f.value(s));
  return out;
}

namespace {

// Components of the subgraph induced by S, as masks.
std::vector<Mask> induced_components(const Graph& g, Mask s) {
  std::vector<int> verts = mask_elements(s);
  std::vector<Mask> comp;
  Mask seen = 0;
  for (int v : verts) {
    if (mask_contains(seen, v)) continue;
    Mask cur = Mask{1} << v;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : g.edges()) {
        if (!mask_contains(s, e.i) || !mask_contains(s, e.j)) continue;
        Mask em = (Mask{1} << e.i) | (Mask{1} << e.j);
        if ((cur & em) != 0 && (cur & em) != em) {
          cur |= em;
          grew = true;
        }
      }
    }
    seen |= cur;
    comp.push_back(cur);
  }
  return comp;
}

}  // namespace

SimpleEqualityResult simple_equality(const SetFunction& f, const Graph& g, Mask s) {
  if (f.n() != g.n()) throw std::invalid_argument("simple_equality: dimension mismatch");
  const Mask all = full_mask(g.n());
  if (s == 0 || s == all || (s & ~all) != 0)
    throw std::invalid_argument("simple_equality: S must be nonempty and proper");

  SimpleEqualityResult res;
  auto try_side = [&](Mask side, bool complement_side) {
    auto comp = induced_components(g, side);
    if (comp.size() < 2) return false;
    Mask part1 = comp[0];
    Mask part2 = side & ~part1;
    res.status = SimpleEqualityResult::Status::kDecomposed;
    res.part1 = part1;
    res.part2 = part2;
    res.on_complement = complement_side;
    res.equality_holds = f.value(side) == f.value(part1) + f.value(part2);
    return true;
  };

  if (try_side(s, false)) return res;
  if (try_side(mask_complement(s, g.n()), true)) return res;

  if (!cut_edges(g, s).empty() && is_minimal_cut(g, s)) {
    res.status = SimpleEqualityResult::Status::kMinimalCut;
  } else {
    // Both sides connected: either a minimal cut or a whole component
    // split off (empty cut), which admits no simple decomposition.
    res.status = cut_edges(g, s).empty()
                     ? SimpleEqualityResult::Status::kIndecomposable
                     : SimpleEqualityResult::Status::kMinimalCut;
  }
  return res;
}

bool simple_equality_holds(const SetFunction& f, const Graph& g, Mask s) {
  auto res = simple_equality(f, g, s);
  return res.status == SimpleEqualityResult::Status::kDecomposed &&
         res.equality_holds;
}

}  // namespace zonograph
