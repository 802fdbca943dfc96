#include "cq/correspondence/pushforward.hpp"

#include <algorithm>
#include <functional>

namespace cq {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Coefficient rows of f * m for all monomials m of the given degree.
void multiples(const QBinaryForm& f, int degree, std::vector<std::vector<Rat>>& rows) {
  if (degree < 0) return;
  for (int i = 0; i <= degree; ++i) {
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
    c[static_cast<std::size_t>(i)] = 1;
    rows.push_back((f * QBinaryForm(degree, c)).coeffs());
  }
}

}  // namespace

PushforwardModule::PushforwardModule(const BinaryQuarticPencil& p, int twist) : d_(twist) {
  if (!is_basepoint_free(p)) fail(ErrorCode::NotBasepointFree, "the quartics share a root");
  low_ = -floor_div(twist, 4);
  std::size_t total = 0;
  // Past degree 6 every form lies in (f1, f2), so no generator appears there.
  for (int n = low_; 4 * (n - 1) + d_ <= 6; ++n) {
    const int deg = 4 * n + d_;
    std::vector<std::vector<Rat>> rows;
    multiples(p.f1(), deg - 4, rows);
    multiples(p.f2(), deg - 4, rows);
    const std::size_t image = rows.empty() ? 0 : span_rank(rows, static_cast<std::size_t>(deg) + 1);
    const std::size_t g = component_dim(n) - image;
    gens_.push_back(g);
    for (std::size_t k = 0; k < g; ++k) split_.push_back(-n);
    total += g;
  }
  if (total != 4) fail(ErrorCode::InternalInconsistency, "pushforward is not of rank 4");
  std::sort(split_.begin(), split_.end(), std::greater<int>());
}

std::size_t PushforwardModule::component_dim(int n) const {
  const int deg = 4 * n + d_;
  return deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1;
}

std::vector<int> pushforward_splitting(const BinaryQuarticPencil& p, int twist) {
  return PushforwardModule(p, twist).splitting();
}

std::vector<int> expected_splitting(int twist) {
  const int n = floor_div(twist, 4), i = twist - 4 * n;
  std::vector<int> out(static_cast<std::size_t>(i) + 1, n);
  out.insert(out.end(), static_cast<std::size_t>(3 - i), n - 1);
  return out;
}

}  // namespace cq
