#include "stripcut/intersection.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace stripcut {

namespace {

// Superposition of two single curves as round chords over a shared axis.
// Crossings form a 4-regular plane graph; each vertex stores its four
// outgoing half-edges in counterclockwise order
//   slot 0: +X along the smaller-slope chord (P)
//   slot 1: +X along the larger-slope chord  (Q)
//   slot 2: -X along P,   slot 3: -X along Q
// and nb[s] = (other vertex, slot there) along that edge.  Edges survive
// R2 reductions by relinking nb, so faces can be retraced combinatorially
// after the round-chord geometry has become stale.

struct Chord {
  long x1, x2;            // x1 < x2
  bool upper;
  int curve;                   // 0 or 1
  int ent, ext;                // traversal endpoints (coordinates)
  std::vector<int> plusx;      // vertex ids in +X order
};

struct HalfRef {
  int v = -1;
  int s = -1;
};

struct Vertex {
  int chordP, chordQ;
  mpq_class x;
  HalfRef nb[4];
  bool alive = true;
  int curve_of(int slot, const std::vector<Chord>& ch) const {
    return ch[(slot % 2 == 0) ? chordP : chordQ].curve;
  }
};

struct Arr {
  std::vector<Chord> chords;
  std::vector<Vertex> verts;
  int alive = 0;

  std::vector<int> face_of;  // per dart id = 4*v + s
  int faces = 0;

  int dart(int v, int s) const { return 4 * v + s; }
  int face_next(int d) const {
    const HalfRef& h = verts[d / 4].nb[d % 4];
    return dart(h.v, (h.s + 3) & 3);
  }
  void trace() {
    face_of.assign(4 * verts.size(), -1);
    faces = 0;
    for (size_t v = 0; v < verts.size(); ++v) {
      if (!verts[v].alive) continue;
      for (int s = 0; s < 4; ++s) {
        int d0 = dart(static_cast<int>(v), s);
        if (face_of[d0] >= 0) continue;
        int f = faces++;
        int d = d0;
        do {
          face_of[d] = f;
          d = face_next(d);
        } while (d != d0);
      }
    }
  }
};

mpq_class cross_x(const Chord& p, const Chord& q) {
  mpq_class num = mpq_class(p.x1) * p.x2 - mpq_class(q.x1) * q.x2;
  mpq_class den = mpq_class(p.x1 + p.x2) - mpq_class(q.x1 + q.x2);
  return num / den;
}

bool interleaved(const Chord& p, const Chord& q) {
  auto in = [&](long v) { return p.x1 < v && v < p.x2; };
  return in(q.x1) != in(q.x2);
}

struct CurveWalk {
  // traversal as a cyclic chord sequence plus the visits along it
  std::vector<int> cycle;                 // chord ids in traversal order
  std::vector<std::pair<int, int>> vis;   // (vertex, position in cycle)
};

struct Builder {
  Arr A;
  CurveWalk walk[2];
  std::vector<long> punc_coord;
  std::vector<HalfRef> anchors;  // per puncture, invalid = outer face
  HalfRef outer;
  bool degenerate = false;

  long leftmost_coord = 0;
  int leftmost_curve = -1;
  int leftmost_cyclepos = -1;  // turn between cycle[k] and cycle[k+1]
};

int out_slot(const Arr& A, int v, int chord) {
  bool isP = (A.verts[v].chordP == chord);
  bool posx = A.chords[chord].ent < A.chords[chord].ext;
  return isP ? (posx ? 0 : 2) : (posx ? 1 : 3);
}

Builder build(const Diagram& alpha, const Diagram& beta, int spread) {
  Builder B;
  Arr& A = B.A;
  const int n = alpha.n;

  std::vector<long> ca(alpha.cross_count()), cb(beta.cross_count());
  B.punc_coord.assign(n, 0);
  {
    long next = 0;
    int ia = 0, ib = 0;
    for (int g = 0; g <= n; ++g) {
      while (ia < alpha.cross_count() && alpha.gap_of(ia) == g) ca[ia++] = (next += 8);
      while (ib < beta.cross_count() && beta.gap_of(ib) == g) cb[ib++] = (next += 8) + spread;
      if (g < n) B.punc_coord[g] = (next += 8) + 4;
    }
  }

  auto add_curve = [&](const Diagram& d, const std::vector<long>& coord, int curve) {
    if (d.cross_count() == 0) return;
    int c = 0;
    bool via_up = true;
    do {
      int p = via_up ? d.up[c] : d.lo[c];
      Chord ch;
      ch.x1 = std::min(coord[c], coord[p]);
      ch.x2 = std::max(coord[c], coord[p]);
      ch.upper = via_up;
      ch.curve = curve;
      ch.ent = static_cast<int>(coord[c]);
      ch.ext = static_cast<int>(coord[p]);
      B.walk[curve].cycle.push_back(static_cast<int>(A.chords.size()));
      A.chords.push_back(ch);
      c = p;
      via_up = !via_up;
    } while (!(c == 0 && via_up));
  };
  add_curve(alpha, ca, 0);
  add_curve(beta, cb, 1);

  // global leftmost axis point and the turn through it
  {
    long best = 0;
    for (int curve = 0; curve < 2; ++curve) {
      const auto& cyc = B.walk[curve].cycle;
      for (size_t k = 0; k < cyc.size(); ++k) {
        const Chord& c1 = A.chords[cyc[k]];
        const Chord& c2 = A.chords[cyc[(k + 1) % cyc.size()]];
        long shared = c1.ext;
        (void)c2;
        if (B.leftmost_curve < 0 || shared < best) {
          best = shared;
          B.leftmost_curve = curve;
          B.leftmost_cyclepos = static_cast<int>(k);
        }
      }
    }
    B.leftmost_coord = best;
  }

  // crossings
  for (size_t i = 0; i < A.chords.size(); ++i) {
    for (size_t j = i + 1; j < A.chords.size(); ++j) {
      Chord &p = A.chords[i], &q = A.chords[j];
      if (p.curve == q.curve || p.upper != q.upper) continue;
      if (!interleaved(p, q)) continue;
      Vertex vx;
      long sp = p.x1 + p.x2, sq = q.x1 + q.x2;
      bool p_small = p.upper ? (sp < sq) : (sp > sq);
      vx.chordP = static_cast<int>(p_small ? i : j);
      vx.chordQ = static_cast<int>(p_small ? j : i);
      vx.x = cross_x(p, q);
      int v = static_cast<int>(A.verts.size());
      A.verts.push_back(vx);
      p.plusx.push_back(v);
      q.plusx.push_back(v);
    }
  }
  A.alive = static_cast<int>(A.verts.size());
  if (A.alive == 0) return B;

  for (size_t i = 0; i < A.chords.size(); ++i) {
    auto& v = A.chords[i].plusx;
    std::sort(v.begin(), v.end(),
              [&](int a, int b) { return A.verts[a].x < A.verts[b].x; });
    for (size_t k = 0; k + 1 < v.size(); ++k)
      if (A.verts[v[k]].x == A.verts[v[k + 1]].x) {
        B.degenerate = true;
        return B;
      }
  }

  // visits per curve in traversal order, then edge links
  for (int curve = 0; curve < 2; ++curve) {
    auto& W = B.walk[curve];
    for (size_t k = 0; k < W.cycle.size(); ++k) {
      const Chord& ch = A.chords[W.cycle[k]];
      auto ordered = ch.plusx;
      if (ch.ent > ch.ext) std::reverse(ordered.begin(), ordered.end());
      for (int vid : ordered) W.vis.push_back({vid, static_cast<int>(k)});
    }
    int kv = static_cast<int>(W.vis.size());
    for (int t = 0; t < kv; ++t) {
      int u = W.vis[t].first;
      int w = W.vis[(t + 1) % kv].first;
      int su = out_slot(A, u, W.cycle[W.vis[t].second]);
      int sw = (out_slot(A, w, W.cycle[W.vis[(t + 1) % kv].second]) + 2) & 3;
      A.verts[u].nb[su] = {w, sw};
      A.verts[w].nb[sw] = {u, su};
    }
  }

  // puncture anchors: underside of the lowest covering upper chord
  B.anchors.assign(n, HalfRef{});
  for (int pj = 0; pj < n; ++pj) {
    long px = B.punc_coord[pj];
    int best = -1;
    mpq_class besty2;
    for (size_t i = 0; i < A.chords.size(); ++i) {
      const Chord& ch = A.chords[i];
      if (!ch.upper || !(ch.x1 < px && px < ch.x2)) continue;
      mpq_class c = mpq_class(ch.x1 + ch.x2) / 2;
      mpq_class r = mpq_class(ch.x2 - ch.x1) / 2;
      mpq_class y2 = r * r - (px - c) * (px - c);
      if (best < 0 || y2 < besty2) {
        best = static_cast<int>(i);
        besty2 = y2;
      }
    }
    if (best < 0) continue;  // outer
    const Chord& ch = A.chords[best];
    int right = -1;
    for (int vid : ch.plusx)
      if (A.verts[vid].x > px) {
        right = vid;
        break;
      }
    if (right >= 0) {
      bool isP = (A.verts[right].chordP == best);
      B.anchors[pj] = {right, isP ? 2 : 3};  // -X dart: left side is below
    } else if (!ch.plusx.empty()) {
      int last = ch.plusx.back();
      bool isP = (A.verts[last].chordP == best);
      int plus = isP ? 0 : 1;
      B.anchors[pj] = A.verts[last].nb[plus];  // twin of the +X tail dart
    } else {
      // untouched chord: both sides belong to larger faces; walk the curve's
      // own edge through this chord.  The chord lies on one edge whose side
      // faces are those of the covering turn; fall back to the -X side of the
      // nearest crossed chord on the same curve is overkill here, so instead
      // anchor to the edge through the chord via the traversal walk.
      const auto& W = B.walk[ch.curve];
      int cyclepos = -1;
      for (size_t k = 0; k < W.cycle.size(); ++k)
        if (W.cycle[k] == best) cyclepos = static_cast<int>(k);
      // edge covering cycle position: last visit with position <= cyclepos
      int kv = static_cast<int>(W.vis.size());
      int t = -1;
      for (int q = 0; q < kv; ++q)
        if (W.vis[q].second <= cyclepos) t = q;
      if (t < 0) t = kv - 1;  // wraps
      int u = W.vis[t].first;
      int su = out_slot(A, u, W.cycle[W.vis[t].second]);
      // forward dart (u, su) travels the edge containing the chord; pick the
      // side facing down: when the chord is traversed in +X the underside is
      // the right face, i.e. the left face of the twin.
      bool posx = A.chords[best].ent < A.chords[best].ext;
      if (posx)
        B.anchors[pj] = A.verts[u].nb[su];
      else
        B.anchors[pj] = {u, su};
    }
  }

  // outer anchor: the dart passing the global leftmost turn downward
  {
    const auto& W = B.walk[B.leftmost_curve];
    int k = B.leftmost_cyclepos;
    int kv = static_cast<int>(W.vis.size());
    int t = -1;
    for (int q = 0; q < kv; ++q)
      if (W.vis[q].second <= k) t = q;
    if (t < 0) t = kv - 1;
    int u = W.vis[t].first;
    int su = out_slot(A, u, W.cycle[W.vis[t].second]);
    // forward dart passes the turn along the traversal; downward iff the
    // chord before the turn is the upper one.  Passing the leftmost point
    // upward keeps the outer region on the left.
    bool upper_first = A.chords[W.cycle[k]].upper;
    if (upper_first)
      B.outer = A.verts[u].nb[su];
    else
      B.outer = {u, su};
  }
  return B;
}

// splice vertex v out of both curves and mark it dead
void splice_out(Arr& A, int v) {
  for (int pass = 0; pass < 2; ++pass) {
    // the two opposite slot pairs (0,2) and (1,3) are the two strands
    int s_out = pass == 0 ? 0 : 1;
    int s_in = s_out + 2;
    HalfRef a = A.verts[v].nb[s_out];
    HalfRef b = A.verts[v].nb[s_in];
    A.verts[a.v].nb[a.s] = b;
    A.verts[b.v].nb[b.s] = a;
  }
  A.verts[v].alive = false;
  --A.alive;
}

// advance an anchor off dying vertices
bool remap_anchor(Arr& A, HalfRef& h, const std::vector<char>& dying) {
  size_t guard = 0;
  while (h.v >= 0 && dying[h.v]) {
    HalfRef back = A.verts[h.v].nb[(h.s + 2) & 3];
    h = back;
    if (++guard > A.verts.size()) return false;  // whole strand dying
  }
  return true;
}

long long sweep(Builder& B) {
  Arr& A = B.A;
  if (A.alive == 0) return 0;
  const bool dbg = std::getenv("STRIPCUT_DEBUG_ARR") != nullptr;
  while (true) {
    A.trace();
    if (dbg) {
      std::printf("round: %d vertices, %d faces; anchors:", A.alive, A.faces);
      for (size_t pj = 0; pj < B.anchors.size(); ++pj)
        if (B.anchors[pj].v >= 0)
          std::printf(" P%zu=f%d(v%d s%d)", pj + 1,
                      A.face_of[A.dart(B.anchors[pj].v, B.anchors[pj].s)], B.anchors[pj].v,
                      B.anchors[pj].s);
        else
          std::printf(" P%zu=outer", pj + 1);
      if (B.outer.v >= 0)
        std::printf(" outer=f%d(v%d s%d)", A.face_of[A.dart(B.outer.v, B.outer.s)], B.outer.v,
                    B.outer.s);
      std::printf("\n");
    }
    // collect candidate bigons: faces with exactly two darts
    std::vector<int> size(A.faces, 0);
    std::vector<std::array<int, 2>> two(A.faces, {-1, -1});
    for (size_t v = 0; v < A.verts.size(); ++v) {
      if (!A.verts[v].alive) continue;
      for (int s = 0; s < 4; ++s) {
        int d = A.dart(static_cast<int>(v), s);
        int f = A.face_of[d];
        if (size[f] < 2) two[f][size[f]] = d;
        ++size[f];
      }
    }
    std::vector<char> banned(A.faces, 0);
    for (int pj = 0; pj < static_cast<int>(B.anchors.size()); ++pj)
      if (B.anchors[pj].v >= 0) banned[A.face_of[A.dart(B.anchors[pj].v, B.anchors[pj].s)]] = 1;
    if (B.outer.v >= 0) banned[A.face_of[A.dart(B.outer.v, B.outer.s)]] = 1;

    std::vector<char> dying(A.verts.size(), 0);
    std::vector<int> victims;
    for (int f = 0; f < A.faces; ++f) {
      if (size[f] != 2 || banned[f]) continue;
      int v1 = two[f][0] / 4, v2 = two[f][1] / 4;
      if (v1 == v2 || dying[v1] || dying[v2]) continue;
      dying[v1] = dying[v2] = 1;
      victims.push_back(v1);
      victims.push_back(v2);
      if (dbg)
        std::printf("  removing bigon f%d: darts (v%d s%d) (v%d s%d)\n", f, two[f][0] / 4,
                    two[f][0] % 4, two[f][1] / 4, two[f][1] % 4);
      if (std::getenv("STRIPCUT_ONE_BIGON")) break;
    }
    if (victims.empty()) {
      if (std::getenv("STRIPCUT_DEBUG_ARR")) {
        std::printf("stuck with %d vertices, %d faces\n", A.alive, A.faces);
        for (size_t v = 0; v < A.verts.size(); ++v) {
          if (!A.verts[v].alive) continue;
          for (int s = 0; s < 4; ++s)
            std::printf("  dart v%zu s%d -> face %d (nb v%d s%d)\n", v, s,
                        A.face_of[A.dart(static_cast<int>(v), s)], A.verts[v].nb[s].v,
                        A.verts[v].nb[s].s);
        }
        for (size_t pj = 0; pj < B.anchors.size(); ++pj)
          if (B.anchors[pj].v >= 0)
            std::printf("  P%zu anchored at v%d s%d face %d\n", pj + 1, B.anchors[pj].v,
                        B.anchors[pj].s, A.face_of[A.dart(B.anchors[pj].v, B.anchors[pj].s)]);
          else
            std::printf("  P%zu in outer face\n", pj + 1);
        if (B.outer.v >= 0)
          std::printf("  outer anchored at v%d s%d face %d\n", B.outer.v, B.outer.s,
                      A.face_of[A.dart(B.outer.v, B.outer.s)]);
        for (int f = 0; f < A.faces; ++f) std::printf("  face %d size %d\n", f, size[f]);
      }
      break;
    }
    for (auto& h : B.anchors)
      if (h.v >= 0 && !remap_anchor(A, h, dying)) h = HalfRef{};
    if (B.outer.v >= 0 && !remap_anchor(A, B.outer, dying)) B.outer = HalfRef{};
    for (int v : victims) splice_out(A, v);
    if (A.alive == 0) return 0;
  }
  return A.alive;
}

}  // namespace

long long pair_intersection(const Diagram& alpha, const Diagram& beta) {
  if (alpha.n != beta.n) throw std::invalid_argument("pair_intersection: strand counts differ");
  if (components(alpha).size() != 1 || components(beta).size() != 1)
    throw std::invalid_argument("pair_intersection wants single curves");
  for (int spread = 1; spread <= 7; spread += 2) {
    Builder B = build(alpha, beta, spread);
    if (B.degenerate) continue;
    return sweep(B);
  }
  throw std::runtime_error("pair_intersection: no non-degenerate superposition found");
}

long long intersection_number(const Diagram& a, const Diagram& b) {
  if (a.n != b.n) throw std::invalid_argument("intersection_number: strand counts differ");
  long long total = 0;
  for (const auto& pa : split_components(a))
    for (const auto& pb : split_components(b)) total += pair_intersection(pa, pb);
  return total;
}

}  // namespace stripcut
