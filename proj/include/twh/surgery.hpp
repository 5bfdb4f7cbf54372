#pragma once

#include "enumeration.hpp"

#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace twh {

// One ribbon attachment between boundary points of disks i and j (i < j),
// with a local orientation sign at each end.
struct Gluing {
  int i, j;
  int eps, delta;  // +1 or -1

  Gluing(int i_, int j_, int eps_, int delta_) : i(i_), j(j_), eps(eps_), delta(delta_) {
    if (i < 1 || i >= j) throw std::invalid_argument("Gluing: need 1 <= i < j");
    if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1))
      throw std::invalid_argument("Gluing: signs must be +1 or -1");
  }

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

// n labeled disks with ribbons glued in the order listed (first applied
// first). Disk indices must lie in 1..n.
struct RibbonDecomposition {
  int n = 0;
  std::vector<Gluing> gluings;

  RibbonDecomposition(int n_, std::vector<Gluing> gluings_)
      : n(n_), gluings(std::move(gluings_)) {
    if (n < 0) throw std::invalid_argument("RibbonDecomposition: negative n");
    for (size_t k = 0; k < gluings.size(); ++k)
      if (gluings[k].j > n)
        throw std::invalid_argument("RibbonDecomposition: gluing " + std::to_string(k + 1) +
                                    " touches disk " + std::to_string(gluings[k].j) +
                                    " outside 1.." + std::to_string(n));
  }

  int m() const { return static_cast<int>(gluings.size()); }
};

// Xi sends gluing (i, j, eps, delta) to the transposition (i^eps, j^delta) on
// 2n points, where x^+ = x and x^- = tau(x) = x + n. Over words with i < j
// and all four sign pairs this is a bijection onto the admissible
// transpositions.
inline std::vector<Transposition> xi(const RibbonDecomposition& rd) {
  std::vector<Transposition> out;
  for (const auto& g : rd.gluings) {
    int a = g.eps == 1 ? g.i : g.i + rd.n;
    int b = g.delta == 1 ? g.j : g.j + rd.n;
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

// Boundary permutation of the orientation cover: u = w tau w^{-1} tau with
// w = s_1 o ... o s_m, s_k = Xi(gluing k), rightmost factor applied first.
inline Permutation boundary_permutation_cover(const RibbonDecomposition& rd) {
  int N = 2 * rd.n;
  std::vector<int> w(N);
  for (int x = 0; x < N; ++x) w[x] = x + 1;
  // w = s_1 o ... o s_m: right-compose each in word order
  for (const auto& s : xi(rd)) std::swap(w[s.a - 1], w[s.b - 1]);
  Permutation wp{w};
  Permutation t = tau(rd.n);
  return compose(wp, compose(t, compose(wp.inverse(), t)));
}

// Orientation double cover: disks d and d + n mirror disk d; gluing k of the
// base lifts to two all-++ gluings, placed mirrored-first in reverse order
// (positions 1..m carry (i_k^{-eps}, j_k^{-delta}) for k = m..1, positions
// m+1..2m carry (i_k^{eps}, j_k^{delta}) for k = 1..m), so that relabeling by
// tau and reversing positions maps the cover word to itself.
inline RibbonDecomposition orientation_cover(const RibbonDecomposition& rd) {
  auto lift = [&](const Gluing& g, int sign) {
    int a = g.eps == sign ? g.i : g.i + rd.n;
    int b = g.delta == sign ? g.j : g.j + rd.n;
    return Gluing(std::min(a, b), std::max(a, b), 1, 1);
  };
  std::vector<Gluing> cover;
  for (int k = rd.m() - 1; k >= 0; --k) cover.push_back(lift(rd.gluings[k], -1));
  for (int k = 0; k < rd.m(); ++k) cover.push_back(lift(rd.gluings[k], 1));
  return RibbonDecomposition(2 * rd.n, std::move(cover));
}

struct SurfaceComponent {
  std::vector<int> disks;        // ascending
  int euler_characteristic = 0;  // #disks - #gluings touching the component
  bool orientable = true;
  Partition boundary;  // marked-point counts of this component's boundary circles
  std::string classification;
};

struct SurfaceReport {
  int n = 0, m = 0;
  std::vector<SurfaceComponent> components;  // by smallest disk
  Partition boundary_type;                   // all components merged
  Partition cover_boundary_type;             // cycle type of the cover boundary permutation
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::string classification_text(bool orientable, int chi, int b) {
  auto plural = [](int k, const std::string& word) {
    return std::to_string(k) + " " + word + (k == 1 ? "" : "s");
  };
  if (orientable) {
    int g2 = 2 - chi - b;  // 2g
    if (g2 < 0 || g2 % 2)
      throw std::logic_error("surface: impossible orientable invariants");
    return "genus " + std::to_string(g2 / 2) + ", " + plural(b, "boundary circle");
  }
  int k = 2 - chi - b;  // cross-caps
  if (k < 1) throw std::logic_error("surface: impossible non-orientable invariants");
  return plural(k, "cross-cap") + ", " + plural(b, "boundary circle");
}

}  // namespace detail

// Full topological report of the glued surface: components, Euler
// characteristics, orientability via the double cover, boundary circles from
// the tau-paired cycles of the cover boundary permutation, and the standard
// classification of each compact surface with boundary.
inline SurfaceReport analyze(const RibbonDecomposition& rd) {
  SurfaceReport rep;
  rep.n = rd.n;
  rep.m = rd.m();

  detail::UnionFind base(rd.n + 1);
  for (const auto& g : rd.gluings) base.unite(g.i, g.j);
  detail::UnionFind cover(2 * rd.n + 1);
  for (const auto& g : orientation_cover(rd).gluings) cover.unite(g.i, g.j);

  // group disks into components
  std::map<int, int> comp_index;  // base root -> index into rep.components
  std::vector<int> gluing_count;
  for (int d = 1; d <= rd.n; ++d) {
    int r = base.find(d);
    if (!comp_index.count(r)) {
      comp_index.emplace(r, static_cast<int>(rep.components.size()));
      rep.components.push_back({});
      gluing_count.push_back(0);
    }
    rep.components[comp_index.at(r)].disks.push_back(d);
  }
  for (const auto& g : rd.gluings) ++gluing_count[comp_index.at(base.find(g.i))];

  // orientability: the fiber over a component splits into two cover
  // components exactly when the surface piece is orientable
  for (auto& comp : rep.components) {
    std::set<int> fibers;
    for (int d : comp.disks) {
      fibers.insert(cover.find(d));
      fibers.insert(cover.find(d + rd.n));
    }
    if (fibers.size() != 1 && fibers.size() != 2)
      throw std::logic_error("surface: cover fiber split into more than two components");
    comp.orientable = fibers.size() == 2;
    int ci = comp_index.at(base.find(comp.disks[0]));
    comp.euler_characteristic = static_cast<int>(comp.disks.size()) - gluing_count[ci];
  }

  // boundary circles: tau-paired cycles of the cover boundary permutation,
  // one circle per pair, attributed to the component its points reduce to
  Permutation u = boundary_permutation_cover(rd);
  rep.cover_boundary_type = u.cycle_type();
  auto cls = classify_twisted(u);
  if (!cls.doubled_type)
    throw std::logic_error("surface: cover boundary permutation has a self-symmetric cycle");
  auto cycles = u.cycles();
  std::vector<std::vector<int>> comp_parts(rep.components.size());
  for (const auto& [ci_a, ci_b] : cls.paired_cycles) {
    const auto& cyc = cycles[ci_a];
    int disk = cyc[0] <= rd.n ? cyc[0] : cyc[0] - rd.n;
    int target = comp_index.at(base.find(disk));
    for (int x : cyc) {
      int d = x <= rd.n ? x : x - rd.n;
      if (comp_index.at(base.find(d)) != target)
        throw std::logic_error("surface: boundary circle crosses components");
    }
    comp_parts[target].push_back(static_cast<int>(cyc.size()));
  }
  std::vector<int> all_parts;
  for (size_t ci = 0; ci < rep.components.size(); ++ci) {
    auto& comp = rep.components[ci];
    comp.boundary = Partition(comp_parts[ci]);
    all_parts.insert(all_parts.end(), comp_parts[ci].begin(), comp_parts[ci].end());
    comp.classification = detail::classification_text(
        comp.orientable, comp.euler_characteristic, comp.boundary.length());
  }
  rep.boundary_type = Partition(std::move(all_parts));
  if (rep.boundary_type != *cls.doubled_type)
    throw std::logic_error("surface: boundary type disagrees with the doubled cycle type");
  return rep;
}

// All valid single gluings on n disks: i < j, all four sign pairs; there are
// 2n(n-1) of them, in bijection with the admissible transpositions via Xi.
inline std::vector<Gluing> valid_gluings(int n) {
  std::vector<Gluing> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int eps : {1, -1})
        for (int delta : {1, -1}) out.emplace_back(i, j, eps, delta);
  return out;
}

// Counts length-m gluing words by the boundary type of the glued surface.
// Runs through the surgery pipeline (word -> cover boundary permutation ->
// doubled type), independently of the transposition enumeration.
inline std::map<Partition, BigInt> count_decompositions(int n, int m,
                                                        const EnumerateOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("count_decompositions: need n >= 1");
  if (m < 0) throw std::invalid_argument("count_decompositions: need m >= 0");
  auto gs = valid_gluings(n);
  int k = static_cast<int>(gs.size());
  double work = 1;
  for (int i = 0; i < m; ++i) work *= k;
  if (work > static_cast<double>(opts.max_work))
    throw BudgetError("count_decompositions: " + std::to_string(k) + "^" + std::to_string(m) +
                      " words exceed the work budget of " + std::to_string(opts.max_work));
  std::map<Partition, BigInt> counts;
  if (m > 0 && k == 0) return counts;  // no valid gluings to choose from
  std::vector<int> digit(m, 0);
  std::vector<Gluing> word;
  while (true) {
    word.clear();
    for (int d : digit) word.push_back(gs[d]);
    Permutation u = boundary_permutation_cover(RibbonDecomposition(n, word));
    auto cls = classify_twisted(u);
    ++counts[*cls.doubled_type];
    int j = m - 1;
    while (j >= 0 && digit[j] == k - 1) digit[j--] = 0;
    if (j < 0) break;
    ++digit[j];
  }
  return counts;
}

// Word syntax: semicolon-separated gluings "G[i,j]^{ed}" with e, d in {+,-},
// e.g. "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}". The empty string is the bare
// n-disk decomposition.
inline RibbonDecomposition parse_word(const std::string& text, int n) {
  std::vector<Gluing> gluings;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("word parse error at position " + std::to_string(pos) + ": " +
                                what);
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected disk index");
    return std::stoi(text.substr(start, pos - start));
  };
  auto read_sign = [&]() {
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected '+' or '-'");
    return text[pos++] == '+' ? 1 : -1;
  };
  while (pos < text.size()) {
    if (!gluings.empty()) expect(';');
    size_t at = pos;
    expect('G');
    expect('[');
    int i = read_int();
    expect(',');
    int j = read_int();
    expect(']');
    expect('^');
    expect('{');
    int eps = read_sign();
    int delta = read_sign();
    expect('}');
    try {
      gluings.emplace_back(i, j, eps, delta);
    } catch (const std::invalid_argument& e) {
      pos = at;
      fail(e.what());
    }
  }
  return RibbonDecomposition(n, std::move(gluings));
}

inline std::string word_to_string(const RibbonDecomposition& rd) {
  std::string out;
  for (const auto& g : rd.gluings) {
    if (!out.empty()) out += ';';
    out += "G[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]^{" +
           (g.eps == 1 ? "+" : "-") + (g.delta == 1 ? "+" : "-") + "}";
  }
  return out;
}

}  // namespace twh
