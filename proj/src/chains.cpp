#include "stripcut/chains.hpp"

#include <stdexcept>

#include "stripcut/intersection.hpp"

namespace stripcut {

ChainPartition chain_partition(const std::vector<Diagram>& curves) {
  const int r = static_cast<int>(curves.size());
  if (r == 0) throw std::invalid_argument("chain_partition: empty input");
  const int n = curves[0].n;
  for (const auto& c : curves) {
    if (c.n != n) throw std::invalid_argument("chain_partition: strand counts differ");
    if (components(c).size() != 1 || !is_multicurve(c))
      throw std::invalid_argument("chain_partition: entries must be single essential curves");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (curves[i] == curves[j])
        throw std::invalid_argument("chain_partition: entries must be distinct");

  std::vector<std::vector<char>> meets(r, std::vector<char>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      meets[i][j] = meets[j][i] = intersection_number(curves[i], curves[j]) > 0;

  ChainPartition out;
  out.xi = n - 2;
  std::vector<int> part_of(r, -1);
  std::vector<int> back(r, -1);
  for (int i = 0; i < r; ++i) {
    // u = largest v such that every part A_1..A_v already holds an earlier
    // curve meeting curve i; then i joins A_{u+1}
    int u = 0;
    while (u < static_cast<int>(out.parts.size())) {
      int hit = -1;
      for (int j : out.parts[u])
        if (meets[i][j]) hit = j;
      if (hit < 0) break;
      back[i] = hit;
      ++u;
    }
    if (u == static_cast<int>(out.parts.size())) out.parts.emplace_back();
    if (u == 0) back[i] = -1;
    out.parts[u].push_back(i);
    part_of[i] = u;
  }
  // witness chain from any member of the last part
  int t = static_cast<int>(out.parts.size());
  int j = out.parts[t - 1].front();
  out.chain.assign(1, j);
  while (back[j] >= 0) {
    j = back[j];
    out.chain.insert(out.chain.begin(), j);
  }
  return out;
}

int longest_chain_bruteforce(const std::vector<Diagram>& curves) {
  const int r = static_cast<int>(curves.size());
  std::vector<std::vector<char>> meets(r, std::vector<char>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      meets[i][j] = meets[j][i] = intersection_number(curves[i], curves[j]) > 0;
  // longest increasing subsequence with the chain condition
  std::vector<int> best(r, 1);
  int out = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < i; ++j)
      if (meets[j][i] && best[j] + 1 > best[i]) best[i] = best[j] + 1;
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace stripcut
