#include "cq/kgroup/mutation.hpp"

#include <cstdlib>
#include <deque>
#include <map>

namespace cq {

namespace {

using Basis = std::array<std::array<long long, 4>, 4>;  // new classes as rows in the old basis

constexpr long long kEntryLimit = 1000000;

EulerForm transform(const EulerForm& e, const Basis& p) {
  EulerForm::Entries out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      long long acc = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += p[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * e(i, j) *
                                           p[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
    }
  return EulerForm(out);
}

Basis identity_basis() {
  Basis p{};
  for (std::size_t i = 0; i < 4; ++i) p[i][i] = 1;
  return p;
}

void check_position(int i, int hi) {
  if (i < 0 || i > hi) fail(ErrorCode::InvalidInput, "mutation position out of range");
}

bool within_limit(const EulerForm& e) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::llabs(e(i, j)) > kEntryLimit) return false;
  return true;
}

EulerForm apply_signs(const EulerForm& e, int mask) {
  EulerForm::Entries g = e.entries();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool fi = (mask >> i) & 1, fj = (mask >> j) & 1;
      if (fi != fj) g[i][j] = -g[i][j];
    }
  return EulerForm(g);
}

struct Visit {
  EulerForm parent;
  Move move;
};

using VisitMap = std::map<EulerForm, std::optional<Visit>>;

std::vector<EulerForm> expand_layer(const std::vector<EulerForm>& frontier, VisitMap& seen) {
  std::vector<EulerForm> next;
  for (const auto& x : frontier)
    for (int k = 0; k < 6; ++k) {
      const Move m{k < 3 ? MoveKind::Left : MoveKind::Right, k % 3};
      const EulerForm y = canonical_sign_form(apply_move(x, m));
      if (!within_limit(y) || seen.count(y)) continue;
      seen.emplace(y, Visit{x, m});
      next.push_back(y);
    }
  return next;
}

// Moves from the root of the search tree to x, in forward order.
std::vector<Move> chain_to(const VisitMap& seen, EulerForm x) {
  std::vector<Move> moves;
  while (true) {
    const auto& v = seen.at(x);
    if (!v) break;
    moves.push_back(v->move);
    x = v->parent;
  }
  return {moves.rbegin(), moves.rend()};
}

}  // namespace

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::Left: return "left";
    case MoveKind::Right: return "right";
    case MoveKind::Flip: return "flip";
  }
  return "?";
}

EulerForm mutate_left(const EulerForm& e, int i) {
  check_position(i, 2);
  const long long chi = e(i, i + 1);
  Basis p = identity_basis();
  const auto a = static_cast<std::size_t>(i), b = a + 1;
  p[a] = {0, 0, 0, 0};
  p[a][a] = chi;
  p[a][b] = -1;
  p[b] = {0, 0, 0, 0};
  p[b][a] = 1;
  return transform(e, p);
}

EulerForm mutate_right(const EulerForm& e, int i) {
  check_position(i, 2);
  const long long chi = e(i, i + 1);
  Basis p = identity_basis();
  const auto a = static_cast<std::size_t>(i), b = a + 1;
  p[a] = {0, 0, 0, 0};
  p[a][b] = 1;
  p[b] = {0, 0, 0, 0};
  p[b][b] = chi;
  p[b][a] = -1;
  return transform(e, p);
}

EulerForm flip_sign(const EulerForm& e, int i) {
  check_position(i, 3);
  return apply_signs(e, 1 << i);
}

EulerForm apply_move(const EulerForm& e, const Move& m) {
  switch (m.kind) {
    case MoveKind::Left: return mutate_left(e, m.index);
    case MoveKind::Right: return mutate_right(e, m.index);
    case MoveKind::Flip: return flip_sign(e, m.index);
  }
  fail(ErrorCode::InvalidInput, "unknown move");
}

EulerForm replay(const EulerForm& e, const MutationPath& path) {
  EulerForm x = e;
  for (const auto& m : path) x = apply_move(x, m);
  return x;
}

EulerForm canonical_sign_form(const EulerForm& e) {
  EulerForm best = e;
  for (int mask = 1; mask < 16; ++mask) {
    const EulerForm c = apply_signs(e, mask);
    if (c < best) best = c;
  }
  return best;
}

SearchResult mutation_equivalent(const EulerForm& a, const EulerForm& b, int depth) {
  if (depth < 0 || depth > 16) fail(ErrorCode::InvalidInput, "depth must lie in 0..16");
  SearchResult res;
  const EulerForm ca = canonical_sign_form(a), cb = canonical_sign_form(b);
  VisitMap from_a{{ca, std::nullopt}}, from_b{{cb, std::nullopt}};
  std::vector<EulerForm> fa{ca}, fb{cb};
  std::optional<EulerForm> meet;
  if (ca == cb) meet = ca;
  int used = 0;
  while (!meet && used < depth) {
    const bool grow_a = fa.size() <= fb.size();
    auto& frontier = grow_a ? fa : fb;
    auto& seen = grow_a ? from_a : from_b;
    const auto& other = grow_a ? from_b : from_a;
    frontier = expand_layer(frontier, seen);
    ++used;
    for (const auto& x : frontier)
      if (other.count(x)) {
        meet = x;
        break;
      }
    if (frontier.empty()) break;
  }
  res.states_visited = from_a.size() + from_b.size();
  if (!meet) return res;

  MutationPath path;
  EulerForm x = a;
  for (const auto& m : chain_to(from_a, *meet)) {
    path.push_back(m);
    x = apply_move(x, m);
  }
  // Walk the b-side chain backwards, inverting each move.
  auto back = chain_to(from_b, *meet);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    const Move inv{it->kind == MoveKind::Left ? MoveKind::Right : MoveKind::Left, it->index};
    path.push_back(inv);
    x = apply_move(x, inv);
  }
  res.mutations = path.size();
  for (int mask = 0; mask < 16; ++mask) {
    if (!(apply_signs(x, mask) == b)) continue;
    for (int i = 0; i < 4; ++i)
      if ((mask >> i) & 1) path.push_back({MoveKind::Flip, i});
    if (!(replay(a, path) == b)) fail(ErrorCode::InternalInconsistency, "mutation path does not replay");
    res.path = std::move(path);
    return res;
  }
  fail(ErrorCode::InternalInconsistency, "mutation classes met but signs disagree");
}

Json path_to_json(const MutationPath& path) {
  Json j = Json::array();
  for (const auto& m : path) j.push_back({{"move", move_name(m.kind)}, {"index", m.index}});
  return j;
}

}  // namespace cq
