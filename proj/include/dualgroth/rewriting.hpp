#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dualgroth/errors.hpp"

namespace dualgroth {

// Order in which available rewrite moves are taken. Under a terminating,
// locally confluent system the normal form does not depend on the choice;
// exposing several orders lets tests assert exactly that.
enum class Strategy { MinFirst, MaxFirst, Random };

// A rewriting instance provides:
//   using State;                       value type with ==, <
//   using Move;
//   std::vector<Move> moves(const State&) const;   deterministic, ascending
//   State apply(const State&, const Move&) const;
//   long long potential(const State&) const;       strictly decreasing per move
template <class System>
typename System::State normal_form(const System& sys, typename System::State state,
                                   Strategy strategy = Strategy::MinFirst,
                                   std::uint64_t seed = 0) {
  std::optional<std::mt19937_64> rng;  // constructed only when needed
  if (strategy == Strategy::Random) rng.emplace(seed);
  long long pot = sys.potential(state);
  for (;;) {
    auto moves = sys.moves(state);
    if (moves.empty()) return state;
    std::size_t pick = 0;
    switch (strategy) {
      case Strategy::MinFirst: pick = 0; break;
      case Strategy::MaxFirst: pick = moves.size() - 1; break;
      case Strategy::Random:
        pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(*rng);
        break;
    }
    state = sys.apply(state, moves[pick]);
    long long next = sys.potential(state);
    DG_CHECK(next < pot);
    pot = next;
  }
}

// Checks the local confluence condition at one state: every pair of one-step
// successors rewrites to a common normal form.
template <class System>
bool locally_confluent_at(const System& sys, const typename System::State& state) {
  auto moves = sys.moves(state);
  std::vector<typename System::State> succ;
  succ.reserve(moves.size());
  for (const auto& m : moves) succ.push_back(sys.apply(state, m));
  for (std::size_t i = 0; i < succ.size(); ++i) {
    for (std::size_t j = i + 1; j < succ.size(); ++j) {
      if (normal_form(sys, succ[i]) != normal_form(sys, succ[j])) return false;
    }
  }
  return true;
}

// All normal forms reachable from a state under every possible move order.
// Exhaustive; intended for small instances in tests. A singleton result
// certifies order independence at this state stronger than pairwise joins.
template <class System>
std::set<typename System::State> all_normal_forms(const System& sys,
                                                  const typename System::State& start) {
  using State = typename System::State;
  std::map<State, std::set<State>> memo;
  auto rec = [&](auto&& self, const State& s) -> const std::set<State>& {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    std::set<State> acc;
    auto moves = sys.moves(s);
    if (moves.empty()) {
      acc.insert(s);
    } else {
      for (const auto& m : moves) {
        const auto& sub = self(self, sys.apply(s, m));
        acc.insert(sub.begin(), sub.end());
      }
    }
    return memo.emplace(s, std::move(acc)).first->second;
  };
  return rec(rec, start);
}

}  // namespace dualgroth
