#pragma once

#include <vector>

namespace alignh {

// Bipartite matching over an explicit adjacency list (left size L, right
// size R, adj[l] = right vertices).  Kuhn's augmenting paths; fine at desk
// scale.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<int>> adj, int right_size);

  int max_matching();
  bool has_perfect_matching();  // perfect on the left side

  // Lexicographically smallest perfect matching: left vertices in order each
  // take the smallest right partner that keeps the remainder perfectly
  // matchable.  Empty result when no perfect matching exists.
  std::vector<int> lex_min_perfect_matching();

 private:
  bool try_augment(int l, std::vector<char>& seen);
  std::vector<std::vector<int>> adj_;
  int right_size_ = 0;
  std::vector<int> match_left_;   // left -> right or -1
  std::vector<int> match_right_;  // right -> left or -1
};

// Exact minimum-cost assignment (Hungarian, O(n^3)) on a dense cost matrix;
// entries may be +infinity (forbidden).  Returns column per row, or empty
// when no finite assignment exists.
std::vector<int> hungarian_min_assignment(
    const std::vector<std::vector<double>>& cost);

}  // namespace alignh
