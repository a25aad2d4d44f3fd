#include "alignh/matching.hpp"

#include <algorithm>
#include <limits>

namespace alignh {

BipartiteMatcher::BipartiteMatcher(std::vector<std::vector<int>> adj,
                                   int right_size)
    : adj_(std::move(adj)), right_size_(right_size) {
  match_left_.assign(adj_.size(), -1);
  match_right_.assign(right_size_, -1);
}

bool BipartiteMatcher::try_augment(int l, std::vector<char>& seen) {
  for (int r : adj_[l]) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (match_right_[r] == -1 || try_augment(match_right_[r], seen)) {
      match_left_[l] = r;
      match_right_[r] = l;
      return true;
    }
  }
  return false;
}

int BipartiteMatcher::max_matching() {
  std::fill(match_left_.begin(), match_left_.end(), -1);
  std::fill(match_right_.begin(), match_right_.end(), -1);
  int matched = 0;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    std::vector<char> seen(right_size_, 0);
    if (try_augment(static_cast<int>(l), seen)) ++matched;
  }
  return matched;
}

bool BipartiteMatcher::has_perfect_matching() {
  return max_matching() == static_cast<int>(adj_.size());
}

std::vector<int> BipartiteMatcher::lex_min_perfect_matching() {
  const int n = static_cast<int>(adj_.size());
  if (!has_perfect_matching()) return {};
  // Greedy with feasibility re-checks: left vertex i takes its smallest
  // usable partner; usable = the rest still matches perfectly.
  std::vector<std::vector<int>> saved = adj_;
  std::vector<int> result(n, -1);
  std::vector<char> taken(right_size_, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> candidates = saved[i];
    std::sort(candidates.begin(), candidates.end());
    bool fixed = false;
    for (int r : candidates) {
      if (taken[r]) continue;
      // Tentatively fix i->r, test the remaining left vertices.
      std::vector<std::vector<int>> rest;
      rest.reserve(n - i - 1);
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> row;
        for (int c : saved[j])
          if (!taken[c] && c != r) row.push_back(c);
        rest.push_back(std::move(row));
      }
      BipartiteMatcher sub(std::move(rest), right_size_);
      if (sub.has_perfect_matching()) {
        result[i] = r;
        taken[r] = 1;
        fixed = true;
        break;
      }
    }
    if (!fixed) return {};  // unreachable when a perfect matching exists
  }
  return result;
}

std::vector<int> hungarian_min_assignment(
    const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const double kInf = std::numeric_limits<double>::infinity();
  // Classic potentials formulation, rows 1..n, columns 1..n.
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == -1 || delta == kInf) return {};  // no finite assignment
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> result(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) result[p[j] - 1] = j - 1;
  return result;
}

}  // namespace alignh
