#pragma once

#include <optional>
#include <vector>

#include "cq/kgroup/euler_form.hpp"

namespace cq {

enum class MoveKind { Left, Right, Flip };

struct Move {
  MoveKind kind;
  int index;
  bool operator==(const Move& o) const { return kind == o.kind && index == o.index; }
};

using MutationPath = std::vector<Move>;

// Left mutation at i replaces (v_i, v_{i+1}) by (chi(v_i, v_{i+1}) v_i - v_{i+1}, v_i);
// right mutation replaces it by (v_{i+1}, chi(v_i, v_{i+1}) v_{i+1} - v_i).
EulerForm mutate_left(const EulerForm& e, int i);
EulerForm mutate_right(const EulerForm& e, int i);
EulerForm flip_sign(const EulerForm& e, int i);
EulerForm apply_move(const EulerForm& e, const Move& m);
EulerForm replay(const EulerForm& e, const MutationPath& path);

// Lexicographically smallest form among all sign changes of the basis.
EulerForm canonical_sign_form(const EulerForm& e);

struct SearchResult {
  std::optional<MutationPath> path;  // empty optional: not found within depth
  std::size_t mutations = 0;         // number of left/right moves on the path
  std::size_t states_visited = 0;
};

// Bidirectional breadth-first search over mutation classes modulo signs;
// depth bounds the number of left/right moves.
SearchResult mutation_equivalent(const EulerForm& a, const EulerForm& b, int depth);

const char* move_name(MoveKind k);

// [{"move": "left", "index": 1}, ...]
Json path_to_json(const MutationPath& path);

}  // namespace cq
