#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "stripcut/braid.hpp"
#include "stripcut/diskcurve.hpp"
#include "stripcut/intersection.hpp"
#include "test_support.hpp"

using namespace stripcut;

namespace {

// Oracle: minimum crossing count of round-chord superpositions over all
// interleavings of the two tight diagrams' cross points within each gap.
// Tight representatives realize the geometric intersection number for some
// interleaving, so the minimum is exact.
long long oracle_pair(const Diagram& a, const Diagram& b) {
  int n = a.n;
  // per gap: counts
  std::vector<int> ga(n + 1, 0), gb(n + 1, 0);
  for (int c = 0; c < a.cross_count(); ++c) ++ga[a.gap_of(c)];
  for (int c = 0; c < b.cross_count(); ++c) ++gb[b.gap_of(c)];
  // enumerate shuffles per gap: positions of b's points among a's in that gap
  // encoded as a nondecreasing map b-point -> #a-points before it
  std::vector<std::vector<std::vector<int>>> choices(n + 1);
  for (int g = 0; g <= n; ++g) {
    std::vector<int> cur(gb[g], 0);
    std::vector<std::vector<int>>& out = choices[g];
    while (true) {
      out.push_back(cur);
      int k = gb[g] - 1;
      while (k >= 0 && cur[k] == ga[g]) --k;
      if (k < 0) break;
      ++cur[k];
      for (int t = k + 1; t < gb[g]; ++t) cur[t] = cur[k];
    }
  }
  // iterate over the product of per-gap choices
  std::vector<size_t> pick(n + 1, 0);
  long long best = -1;
  while (true) {
    // coordinates: a-point c in gap g at (c-th overall): assign by merge
    std::vector<long long> ca(a.cross_count()), cb(b.cross_count());
    long long next = 0;
    int ia = 0, ib = 0;
    for (int g = 0; g <= n; ++g) {
      const std::vector<int>& sh = choices[g][pick[g]];
      int a0 = ia;
      int used = 0;
      for (int t = 0; t < gb[g]; ++t) {
        while (used < sh[t]) ca[a0 + used] = ++next, ++used;
        cb[ib + t] = ++next;
      }
      while (used < ga[g]) ca[a0 + used] = ++next, ++used;
      ia += ga[g];
      ib += gb[g];
      ++next;  // puncture slot
    }
    // count interleaved chord pairs
    auto chords = [&](const Diagram& d, const std::vector<long long>& co, bool upper) {
      std::vector<std::pair<long long, long long>> out;
      const auto& mt = upper ? d.up : d.lo;
      for (int c = 0; c < d.cross_count(); ++c)
        if (mt[c] > c) out.push_back({std::min(co[c], co[mt[c]]), std::max(co[c], co[mt[c]])});
      return out;
    };
    long long cr = 0;
    for (int side = 0; side < 2; ++side) {
      auto A = chords(a, ca, side == 0);
      auto B = chords(b, cb, side == 0);
      for (auto& p : A)
        for (auto& q : B) {
          bool i1 = p.first < q.first && q.first < p.second;
          bool i2 = p.first < q.second && q.second < p.second;
          if (i1 != i2) ++cr;
        }
    }
    if (best < 0 || cr < best) best = cr;
    // advance pick
    int g = 0;
    while (g <= n && ++pick[g] == choices[g].size()) pick[g++] = 0;
    if (g > n) break;
  }
  return best;
}

long long oracle(const Diagram& a, const Diagram& b) {
  long long total = 0;
  for (const auto& pa : split_components(a))
    for (const auto& pb : split_components(b)) total += oracle_pair(pa, pb);
  return total;
}

}  // namespace

TEST_CASE("frozen small values") {
  Diagram a = round_curve(3, 1, 2), b = round_curve(3, 2, 3);
  CHECK(intersection_number(a, a) == 0);
  CHECK(intersection_number(a, b) == 2);
  CHECK(intersection_number(round_curve(4, 1, 2), round_curve(4, 1, 3)) == 0);
  Diagram img = act(parse_braid("s2", 3), a);
  CHECK(intersection_number(img, a) == 2);
}

TEST_CASE("symmetry and disk mismatch") {
  testing::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Diagram a = testing::random_curve(rng, 4, 5);
    Diagram b = testing::random_curve(rng, 4, 5);
    CHECK(intersection_number(a, b) == intersection_number(b, a));
  }
  CHECK_THROWS(intersection_number(round_curve(3, 1, 2), round_curve(4, 1, 2)));
}

TEST_CASE("matches the minimal-position oracle on random small pairs") {
  testing::Rng rng(5);
  int done = 0;
  while (done < 60) {
    int n = 3 + rng.below(2);
    Diagram a = testing::random_curve(rng, n, 3);
    Diagram b = testing::random_curve(rng, n, 3);
    if (a.cross_count() > 8 || b.cross_count() > 8) continue;
    INFO("a=" << to_string(a) << " b=" << to_string(b));
    CHECK(intersection_number(a, b) == oracle(a, b));
    ++done;
  }
}

TEST_CASE("zero iff equal for connected curves of the same class") {
  testing::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    int n = 3 + rng.below(3);
    Diagram a = testing::random_curve(rng, n, 5);
    BraidWord w = testing::random_word(rng, n, 4);
    Diagram b = act(w.inverse().concat(w), a);
    CHECK(canonical_equal(a, b));
    CHECK(intersection_number(a, b) == 0);
  }
}

TEST_CASE("action preserves intersection numbers") {
  testing::Rng rng(123);
  int trials = 0;
  while (trials < 200) {
    int n = 3 + rng.below(4);
    Diagram a = testing::random_curve(rng, n, 4);
    Diagram b = testing::random_curve(rng, n, 4);
    BraidWord w = testing::random_word(rng, n, 1 + rng.below(12));
    long long before = intersection_number(a, b);
    long long after = intersection_number(act(w, a), act(w, b));
    INFO("w=" << braid_to_string(w));
    CHECK(before == after);
    ++trials;
  }
}

TEST_CASE("Dehn twist growth about c12") {
  // i(s1^{2m}(c23), c23) is nondecreasing and matches the oracle for m <= 4
  Diagram gamma = round_curve(3, 2, 3);
  long long prev = 0;
  for (int m = 0; m <= 4; ++m) {
    BraidWord w = parse_braid("s1^" + std::to_string(2 * m), 3);
    if (m == 0) w.letters.clear();
    Diagram img = act(w, gamma);
    long long v = intersection_number(img, gamma);
    CHECK(v >= prev);
    if (img.cross_count() <= 10) CHECK(v == oracle(img, gamma));
    prev = v;
  }
  CHECK(prev > 0);
}
