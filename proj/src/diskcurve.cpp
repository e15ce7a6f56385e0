#include "stripcut/diskcurve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stripcut {

int Diagram::gap_of(int c) const {
  int g = 0;
  for (int j = 0; j < n; ++j)
    if (punc[j] <= c) ++g;
  return g;
}

bool Diagram::puncture_between(int c, int cnext) const {
  (void)cnext;
  for (int j = 0; j < n; ++j)
    if (punc[j] == c + 1) return true;
  return false;
}

static void check_matching(const std::vector<int>& mt, int m, const char* side) {
  std::string s(side);
  if (static_cast<int>(mt.size()) != m)
    throw std::invalid_argument(s + " matching has wrong size");
  for (int c = 0; c < m; ++c) {
    int p = mt[c];
    if (p < 0 || p >= m || p == c || mt[p] != c)
      throw std::invalid_argument(s + " matching is not a perfect involution");
  }
  // planarity: scan with a stack
  std::vector<int> stack;
  for (int c = 0; c < m; ++c) {
    if (mt[c] > c) {
      stack.push_back(c);
    } else {
      if (stack.empty() || stack.back() != mt[c])
        throw std::invalid_argument(s + " matching has crossing chords");
      stack.pop_back();
    }
  }
}

void check_diagram_shape(const Diagram& d) {
  if (d.n < 3) throw std::invalid_argument("need at least 3 punctures");
  if (static_cast<int>(d.punc.size()) != d.n)
    throw std::invalid_argument("puncture table has wrong size");
  int m = d.cross_count();
  for (int j = 0; j < d.n; ++j) {
    if (d.punc[j] < 0 || d.punc[j] > m)
      throw std::invalid_argument("puncture position out of range");
    if (j > 0 && d.punc[j] < d.punc[j - 1])
      throw std::invalid_argument("puncture positions must be nondecreasing");
  }
  check_matching(d.up, m, "upper");
  check_matching(d.lo, m, "lower");
}

bool is_reduced(const Diagram& d) {
  int m = d.cross_count();
  for (int c = 0; c + 1 < m; ++c) {
    if (d.puncture_between(c, c + 1)) continue;
    if (d.up[c] == c + 1 || d.lo[c] == c + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> components(const Diagram& d) {
  int m = d.cross_count();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int c = 0; c < m; ++c) {
    if (comp[c] >= 0) continue;
    std::vector<int> todo{c};
    comp[c] = nc;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int y : {d.up[x], d.lo[x]}) {
        if (comp[y] < 0) {
          comp[y] = nc;
          todo.push_back(y);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int c = 0; c < m; ++c) out[comp[c]].push_back(c);
  return out;
}

std::vector<int> enclosed_punctures(const Diagram& d, const std::vector<int>& comp) {
  std::vector<int> out;
  for (int j = 0; j < d.n; ++j) {
    int left = 0;
    for (int c : comp)
      if (c < d.punc[j]) ++left;
    if (left % 2 == 1) out.push_back(j + 1);
  }
  return out;
}

// Remove cross points marked dead, splicing nothing: caller must already have
// rewired matchings so dead points only pair with dead points.
static Diagram compact(const Diagram& d, const std::vector<char>& dead) {
  Diagram r;
  r.n = d.n;
  int m = d.cross_count();
  std::vector<int> newid(m, -1);
  int k = 0;
  for (int c = 0; c < m; ++c)
    if (!dead[c]) newid[c] = k++;
  r.up.resize(k);
  r.lo.resize(k);
  for (int c = 0; c < m; ++c) {
    if (dead[c]) continue;
    r.up[newid[c]] = newid[d.up[c]];
    r.lo[newid[c]] = newid[d.lo[c]];
  }
  r.punc.resize(d.n);
  for (int j = 0; j < d.n; ++j) {
    int cnt = 0;
    for (int c = 0; c < d.punc[j]; ++c)
      if (!dead[c]) ++cnt;
    r.punc[j] = cnt;
  }
  return r;
}

Diagram reduce(Diagram d) {
  check_diagram_shape(d);
  // innermost bigon removal until none
  bool changed = true;
  while (changed) {
    changed = false;
    int m = d.cross_count();
    for (int c = 0; c + 1 < m; ++c) {
      bool bup = (d.up[c] == c + 1);
      bool blo = (d.lo[c] == c + 1);
      if (!bup && !blo) continue;
      if (d.puncture_between(c, c + 1)) continue;
      std::vector<char> dead(m, 0);
      dead[c] = dead[c + 1] = 1;
      if (bup && blo) {
        // trivial circle: drop both points and their arcs
      } else if (bup) {
        int a = d.lo[c], b = d.lo[c + 1];
        d.lo[a] = b;
        d.lo[b] = a;
      } else {
        int a = d.up[c], b = d.up[c + 1];
        d.up[a] = b;
        d.up[b] = a;
      }
      d = compact(d, dead);
      changed = true;
      break;
    }
  }
  // drop components enclosing no puncture or all of them
  auto comps = components(d);
  std::vector<char> dead(d.cross_count(), 0);
  bool drop = false;
  for (const auto& comp : comps) {
    int e = static_cast<int>(enclosed_punctures(d, comp).size());
    if (e == 0 || e == d.n) {
      for (int c : comp) dead[c] = 1;
      drop = true;
    }
  }
  if (drop) d = compact(d, dead);
  return d;
}

bool is_valid_diagram(const Diagram& d) {
  try {
    check_diagram_shape(d);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!is_reduced(d)) return false;
  for (const auto& comp : components(d)) {
    int e = static_cast<int>(enclosed_punctures(d, comp).size());
    if (e == 0 || e == d.n) return false;
  }
  return true;
}

bool is_multicurve(const Diagram& d) {
  if (!is_valid_diagram(d)) return false;
  auto comps = components(d);
  std::vector<Diagram> parts;
  for (const auto& comp : comps) {
    int e = static_cast<int>(enclosed_punctures(d, comp).size());
    if (e < 2 || e > d.n - 1) return false;  // inessential
    parts.push_back(component_diagram(d, comp));
  }
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i] == parts[j]) return false;
  return true;
}

bool is_pants(const Diagram& d) {
  return is_multicurve(d) &&
         static_cast<int>(components(d).size()) == d.n - 2;
}

bool is_round(const Diagram& d) {
  for (const auto& comp : components(d))
    if (comp.size() != 2) return false;
  return true;
}

Diagram component_diagram(const Diagram& d, const std::vector<int>& comp) {
  std::vector<char> dead(d.cross_count(), 1);
  for (int c : comp) dead[c] = 0;
  return compact(d, dead);
}

std::vector<Diagram> split_components(const Diagram& d) {
  std::vector<Diagram> out;
  for (const auto& comp : components(d)) out.push_back(component_diagram(d, comp));
  return out;
}

Diagram round_pants(int n) {
  if (n < 3) throw std::invalid_argument("need at least 3 punctures");
  Diagram d;
  d.n = n;
  int k = n - 2;  // curves; curve t encircles punctures 1..t+1
  int m = 2 * k;
  d.up.resize(m);
  d.lo.resize(m);
  // axis: a_{k} ... a_1  P1 P2  b_1  P3  b_2 ... b_{k}  Pn
  // a_t has id (k - t), b_t has id (k - 1 + t)
  for (int t = 1; t <= k; ++t) {
    int a = k - t, b = k - 1 + t;
    d.up[a] = b;
    d.up[b] = a;
    d.lo[a] = b;
    d.lo[b] = a;
  }
  d.punc.resize(n);
  d.punc[0] = k;
  d.punc[1] = k;
  for (int j = 3; j <= n; ++j) d.punc[j - 1] = k + (j - 2);
  return d;
}

Diagram round_curve(int n, int i, int j) {
  if (n < 3 || i < 1 || j <= i || j > n || (i == 1 && j == n))
    throw std::invalid_argument("round_curve: bad block");
  Diagram d;
  d.n = n;
  d.up = {1, 0};
  d.lo = {1, 0};
  d.punc.resize(n);
  for (int t = 1; t <= n; ++t) {
    if (t < i)
      d.punc[t - 1] = 0;
    else if (t <= j)
      d.punc[t - 1] = 1;
    else
      d.punc[t - 1] = 2;
  }
  return d;
}

bool canonical_equal(const Diagram& a, const Diagram& b) {
  if (a.n != b.n) throw std::invalid_argument("canonical_equal: strand counts differ");
  return a == b;
}

std::string to_string(const Diagram& d) {
  std::ostringstream os;
  os << "n=" << d.n << " [";
  int m = d.cross_count();
  int c = 0;
  for (int pos = 0; pos <= m; ++pos) {
    for (int j = 0; j < d.n; ++j)
      if (d.punc[j] == pos) os << " P" << (j + 1);
    if (pos < m) os << " x" << c++;
  }
  os << " ]";
  for (int x = 0; x < m; ++x)
    if (d.up[x] > x) os << " U(" << x << "-" << d.up[x] << ")";
  for (int x = 0; x < m; ++x)
    if (d.lo[x] > x) os << " L(" << x << "-" << d.lo[x] << ")";
  return os.str();
}

}  // namespace stripcut
