#pragma once

// Planar (bot, top)-diagrams: non-crossing perfect matchings on the boundary
// of a rectangle. See docs/conventions.md for the orientation conventions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlcat {

enum class Side { B, T };

struct Endpoint {
  Side side;
  int index;  // 1-based, left to right within its row

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint& a, const Endpoint& b) {
    if (a.side != b.side) return a.side == Side::B ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.index <=> b.index;
  }
};

using Arc = std::pair<Endpoint, Endpoint>;

/// Minimal union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

/// A basis element of Hom(bot, top). Boundary points are numbered cyclically:
/// B1..B_bot get positions 0..bot-1, then T_top..T1 get positions bot..bot+top-1.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Builds from a partner table over cyclic positions; validates the matching.
  PlanarDiagram(int bot, int top, std::vector<int> partner) : bot_(bot), top_(top), partner_(std::move(partner)) {
    validate();
  }

  static PlanarDiagram from_arcs(int bot, int top, const std::vector<Arc>& arcs) {
    if (bot < 0 || top < 0) throw std::invalid_argument("negative point count");
    std::vector<int> partner(static_cast<std::size_t>(bot + top), -1);
    auto place = [&](const Endpoint& e) {
      const int lim = e.side == Side::B ? bot : top;
      if (e.index < 1 || e.index > lim) throw std::invalid_argument("endpoint index out of range");
      return position(bot, top, e);
    };
    for (const auto& [a, b] : arcs) {
      const int pa = place(a), pb = place(b);
      if (pa == pb || partner[pa] != -1 || partner[pb] != -1) {
        throw std::invalid_argument("arcs do not form a matching");
      }
      partner[pa] = pb;
      partner[pb] = pa;
    }
    return PlanarDiagram(bot, top, std::move(partner));
  }

  static PlanarDiagram identity(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i) arcs.push_back({{Side::B, i}, {Side::T, i}});
    return from_arcs(n, n, arcs);
  }

  /// Temperley-Lieb generator e_i in TL_n, 1 <= i < n.
  static PlanarDiagram generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    std::vector<Arc> arcs{{{Side::B, i}, {Side::B, i + 1}}, {{Side::T, i}, {Side::T, i + 1}}};
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) arcs.push_back({{Side::B, j}, {Side::T, j}});
    }
    return from_arcs(n, n, arcs);
  }

  int bot() const { return bot_; }
  int top() const { return top_; }
  int points() const { return bot_ + top_; }
  const std::vector<int>& partner() const { return partner_; }

  static int position(int bot, int top, const Endpoint& e) {
    return e.side == Side::B ? e.index - 1 : bot + (top - e.index);
  }
  int position(const Endpoint& e) const { return position(bot_, top_, e); }
  Endpoint endpoint(int pos) const {
    if (pos < bot_) return {Side::B, pos + 1};
    return {Side::T, top_ - (pos - bot_)};
  }
  Endpoint partner_of(const Endpoint& e) const { return endpoint(partner_[static_cast<std::size_t>(position(e))]); }

  /// Canonical arc list: endpoints sorted within an arc, arcs sorted.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int p = 0; p < points(); ++p) {
      const int q = partner_[static_cast<std::size_t>(p)];
      if (p < q) {
        Endpoint a = endpoint(p), b = endpoint(q);
        if (b < a) std::swap(a, b);
        out.emplace_back(a, b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int through_strands() const {
    int t = 0;
    for (int p = 0; p < bot_; ++p) t += partner_[static_cast<std::size_t>(p)] >= bot_;
    return t;
  }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
  friend auto operator<=>(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (auto c = a.bot_ <=> b.bot_; c != 0) return c;
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

 private:
  void validate() const {
    if (bot_ < 0 || top_ < 0) throw std::invalid_argument("negative point count");
    const int n = points();
    if (n % 2 != 0) throw std::invalid_argument("odd number of boundary points");
    if (static_cast<int>(partner_.size()) != n) throw std::invalid_argument("partner table size mismatch");
    for (int p = 0; p < n; ++p) {
      const int q = partner_[static_cast<std::size_t>(p)];
      if (q < 0 || q >= n || q == p || partner_[static_cast<std::size_t>(q)] != p) {
        throw std::invalid_argument("not a perfect matching");
      }
    }
    // Non-crossing: scanning positions, arcs must close in stack order.
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
      const int q = partner_[static_cast<std::size_t>(p)];
      if (q > p) {
        stack.push_back(p);
      } else {
        if (stack.empty() || stack.back() != q) throw std::invalid_argument("arcs cross");
        stack.pop_back();
      }
    }
  }

  int bot_ = 0;
  int top_ = 0;
  std::vector<int> partner_;
};

struct PlanarDiagramHash {
  std::size_t operator()(const PlanarDiagram& d) const noexcept {
    std::size_t h = static_cast<std::size_t>(d.bot()) * 1000003u + static_cast<std::size_t>(d.top());
    for (int v : d.partner()) h = h * 131u + static_cast<std::size_t>(v + 1);
    return h;
  }
};

/// delta^loops times a diagram. Products of basis diagrams are always of this form.
struct ScaledDiagram {
  unsigned loops = 0;
  PlanarDiagram diagram;
  friend bool operator==(const ScaledDiagram&, const ScaledDiagram&) = default;
};

namespace detail {

// Non-crossing perfect matchings of the interval [lo, hi) in linear order.
inline void matchings_rec(int lo, int hi, std::vector<int>& partner,
                          std::vector<std::pair<int, int>>& todo, const std::function<void()>& emit) {
  if (lo >= hi) {
    if (todo.empty()) {
      emit();
      return;
    }
    auto [a, b] = todo.back();
    todo.pop_back();
    matchings_rec(a, b, partner, todo, emit);
    todo.emplace_back(a, b);
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    partner[static_cast<std::size_t>(lo)] = k;
    partner[static_cast<std::size_t>(k)] = lo;
    todo.emplace_back(k + 1, hi);
    matchings_rec(lo + 1, k, partner, todo, emit);
    todo.pop_back();
  }
}

}  // namespace detail

/// All non-crossing perfect matchings of n points in a row, as partner tables.
inline std::vector<std::vector<int>> noncrossing_matchings(int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n % 2 != 0) return out;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> todo;
  detail::matchings_rec(0, n, partner, todo, [&] { out.push_back(partner); });
  return out;
}

/// Basis of Hom(bot, top); empty when bot + top is odd.
inline std::vector<PlanarDiagram> enumerate_diagrams(int bot, int top) {
  std::vector<PlanarDiagram> out;
  if (bot < 0 || top < 0 || (bot + top) % 2 != 0) return out;
  for (auto& m : noncrossing_matchings(bot + top)) out.emplace_back(bot, top, std::move(m));
  return out;
}

inline std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::size_t>(k) + 1) / (static_cast<std::size_t>(k) + 2);
  return c;
}

/// Stacks g (n -> p) on top of f (m -> n); closed loops are counted.
inline ScaledDiagram compose(const PlanarDiagram& f, const PlanarDiagram& g) {
  if (f.top() != g.bot()) throw std::invalid_argument("non-composable");
  const int m = f.bot(), n = f.top(), p = g.top();
  const int fo = 0, go = m + n;
  DisjointSets ds(static_cast<std::size_t>(m + n + n + p));
  for (int i = 0; i < m + n; ++i) ds.unite(fo + i, fo + f.partner()[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n + p; ++i) ds.unite(go + i, go + g.partner()[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= n; ++i) {
    ds.unite(fo + f.position({Side::T, i}), go + g.position({Side::B, i}));
  }
  // Outer points in result cyclic order: f's bottom row, then g's top row.
  std::vector<int> outer;
  for (int i = 1; i <= m; ++i) outer.push_back(fo + f.position({Side::B, i}));
  for (int j = p; j >= 1; --j) outer.push_back(go + g.position({Side::T, j}));
  std::vector<int> first_seen(ds.size(), -1);
  std::vector<int> partner(outer.size(), -1);
  std::vector<char> has_outer(ds.size(), 0);
  for (std::size_t k = 0; k < outer.size(); ++k) {
    const std::size_t root = ds.find(static_cast<std::size_t>(outer[k]));
    has_outer[root] = 1;
    if (first_seen[root] < 0) {
      first_seen[root] = static_cast<int>(k);
    } else {
      partner[k] = first_seen[root];
      partner[static_cast<std::size_t>(first_seen[root])] = static_cast<int>(k);
    }
  }
  unsigned loops = 0;
  std::vector<char> counted(ds.size(), 0);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::size_t r = ds.find(i);
    if (!has_outer[r] && !counted[r]) {
      counted[r] = 1;
      ++loops;
    }
  }
  return {loops, PlanarDiagram(m, p, std::move(partner))};
}

/// Algebra product a*b: a stacked on top of b.
inline ScaledDiagram multiply(const PlanarDiagram& a, const PlanarDiagram& b) { return compose(b, a); }

/// Vertical flip: B_i <-> T_i.
inline PlanarDiagram involution(const PlanarDiagram& f) {
  std::vector<Arc> arcs;
  auto flip = [](Endpoint e) { return Endpoint{e.side == Side::B ? Side::T : Side::B, e.index}; };
  for (const auto& [a, b] : f.arcs()) arcs.push_back({flip(a), flip(b)});
  return PlanarDiagram::from_arcs(f.top(), f.bot(), arcs);
}

/// Places g to the right of f.
inline PlanarDiagram juxtapose(const PlanarDiagram& f, const PlanarDiagram& g) {
  std::vector<Arc> arcs = f.arcs();
  auto shift = [&](Endpoint e) {
    return Endpoint{e.side, e.index + (e.side == Side::B ? f.bot() : f.top())};
  };
  for (const auto& [a, b] : g.arcs()) arcs.push_back({shift(a), shift(b)});
  return PlanarDiagram::from_arcs(f.bot() + g.bot(), f.top() + g.top(), arcs);
}

/// Inverse of juxtapose at a wall after bottom point `left_bot` and top point
/// `left_top`; nullopt if some arc crosses the wall.
inline std::optional<std::pair<PlanarDiagram, PlanarDiagram>> split(const PlanarDiagram& d, int left_bot,
                                                                   int left_top) {
  if (left_bot < 0 || left_top < 0 || left_bot > d.bot() || left_top > d.top()) return std::nullopt;
  std::vector<Arc> left, right;
  auto is_left = [&](const Endpoint& e) { return e.index <= (e.side == Side::B ? left_bot : left_top); };
  for (const auto& [a, b] : d.arcs()) {
    const bool la = is_left(a), lb = is_left(b);
    if (la != lb) return std::nullopt;
    if (la) {
      left.push_back({a, b});
    } else {
      auto shift = [&](Endpoint e) {
        return Endpoint{e.side, e.index - (e.side == Side::B ? left_bot : left_top)};
      };
      right.push_back({shift(a), shift(b)});
    }
  }
  if ((left_bot + left_top) % 2 != 0) return std::nullopt;
  return std::make_pair(PlanarDiagram::from_arcs(left_bot, left_top, left),
                        PlanarDiagram::from_arcs(d.bot() - left_bot, d.top() - left_top, right));
}

// ---------------------------------------------------------------------------
// ASCII rendering. Top row of points first, bottom row last; points sit in
// even columns. Caps hang from their row, through strands are routed in the
// middle band one shift per line. Unmatched points (defects of a half
// diagram) are drawn as short stubs.

namespace detail {

// Nesting depth of arcs within one row (innermost = 1), indexed by the left endpoint.
inline std::vector<int> row_cap_depths(const std::vector<int>& partner_in_row) {
  const int n = static_cast<int>(partner_in_row.size());
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int width = 1; width < n; ++width) {
    for (int i = 0; i + width < n; ++i) {
      if (partner_in_row[static_cast<std::size_t>(i)] != i + width) continue;
      int d = 0;
      for (int k = i + 1; k < i + width; ++k) {
        const int q = partner_in_row[static_cast<std::size_t>(k)];
        if (q > k) d = std::max(d, depth[static_cast<std::size_t>(k)]);
      }
      depth[static_cast<std::size_t>(i)] = d + 1;
    }
  }
  return depth;
}

inline std::string join_cells(const std::vector<std::string>& cells) {
  std::string s;
  for (const auto& c : cells) s += c;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// partner over cyclic positions as in PlanarDiagram; -1 marks a stub.
inline std::string render_partial(int bot, int top, const std::vector<int>& partner) {
  const int width = 2 * std::max(bot, top) - 1;
  if (width <= 0) return "";
  auto blank = [&] { return std::vector<std::string>(static_cast<std::size_t>(width), " "); };
  auto col = [](int index) { return static_cast<std::size_t>(2 * (index - 1)); };
  auto pos = [&](Side side, int i) { return side == Side::B ? i - 1 : bot + (top - i); };
  auto endpoint = [&](int p) { return p < bot ? Endpoint{Side::B, p + 1} : Endpoint{Side::T, top - (p - bot)}; };

  // Per-row partner tables: -1 through strand, -2 stub, else 0-based partner in the row.
  auto row_partners = [&](Side side, int count) {
    std::vector<int> p(static_cast<std::size_t>(count), -1);
    for (int i = 1; i <= count; ++i) {
      const int q = partner[static_cast<std::size_t>(pos(side, i))];
      if (q < 0) {
        p[static_cast<std::size_t>(i - 1)] = -2;
      } else if (endpoint(q).side == side) {
        p[static_cast<std::size_t>(i - 1)] = endpoint(q).index - 1;
      }
    }
    return p;
  };
  const auto top_p = row_partners(Side::T, top);
  const auto bot_p = row_partners(Side::B, bot);
  const auto top_depth = row_cap_depths(top_p);
  const auto bot_depth = row_cap_depths(bot_p);
  auto layers = [](const std::vector<int>& p, const std::vector<int>& depth) {
    int l = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
    if (l == 0 && std::find(p.begin(), p.end(), -2) != p.end()) l = 1;
    return l;
  };
  const int top_layers = layers(top_p, top_depth);
  const int bot_layers = layers(bot_p, bot_depth);

  std::vector<std::pair<int, int>> through;  // (top index, bottom index), left to right
  for (int i = 1; i <= top; ++i) {
    const int q = partner[static_cast<std::size_t>(pos(Side::T, i))];
    if (q >= 0 && endpoint(q).side == Side::B) through.emplace_back(i, endpoint(q).index);
  }

  std::vector<std::string> lines;
  auto point_row = [&](int count) {
    auto cells = blank();
    for (int i = 1; i <= count; ++i) cells[col(i)] = "•";
    lines.push_back(join_cells(cells));
  };
  auto draw_caps = [&](const std::vector<int>& p, const std::vector<int>& depth, int layer, bool hanging,
                       std::vector<std::string>& cells) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      const int j = p[static_cast<std::size_t>(i)];
      if (j == -2) {
        if (layer == 1) cells[col(i + 1)] = hanging ? "╵" : "╷";
        continue;
      }
      if (j < i) continue;
      const int dep = depth[static_cast<std::size_t>(i)];
      const std::size_t a = col(i + 1), b = col(j + 1);
      if (dep == layer) {
        cells[a] = hanging ? "╰" : "╭";
        cells[b] = hanging ? "╯" : "╮";
        for (std::size_t c = a + 1; c < b; ++c) cells[c] = "─";
      } else if (dep > layer) {
        cells[a] = "│";
        cells[b] = "│";
      }
    }
  };

  if (top > 0) point_row(top);
  for (int layer = 1; layer <= top_layers; ++layer) {
    auto cells = blank();
    draw_caps(top_p, top_depth, layer, true, cells);
    for (auto [t, b] : through) cells[col(t)] = "│";
    lines.push_back(join_cells(cells));
  }

  // Middle band: current column of each through strand, shifted one per line.
  std::vector<std::size_t> current;
  for (auto [t, b] : through) current.push_back(col(t));
  if (!through.empty()) {
    auto cells = blank();
    for (auto c : current) cells[c] = "│";
    lines.push_back(join_cells(cells));
  }
  // Right-moving strands rightmost first, then left-moving strands leftmost
  // first; no horizontal run then meets a vertical.
  std::vector<std::size_t> order;
  for (std::size_t k = through.size(); k-- > 0;) {
    if (col(through[k].second) > current[k]) order.push_back(k);
  }
  for (std::size_t k = 0; k < through.size(); ++k) {
    if (col(through[k].second) < current[k]) order.push_back(k);
  }
  for (std::size_t k : order) {
    auto cells = blank();
    for (std::size_t o = 0; o < current.size(); ++o) {
      if (o != k) cells[current[o]] = "│";
    }
    const std::size_t from = current[k], to = col(through[k].second);
    for (std::size_t c = std::min(from, to) + 1; c < std::max(from, to); ++c) cells[c] = "─";
    if (to > from) {
      cells[from] = "╰";
      cells[to] = "╮";
    } else {
      cells[from] = "╯";
      cells[to] = "╭";
    }
    lines.push_back(join_cells(cells));
    current[k] = to;
  }

  for (int layer = bot_layers; layer >= 1; --layer) {
    auto cells = blank();
    draw_caps(bot_p, bot_depth, layer, false, cells);
    for (auto c : current) cells[c] = "│";
    lines.push_back(join_cells(cells));
  }
  if (bot > 0) point_row(bot);

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += "\n";
    out += lines[i];
  }
  return out;
}

}  // namespace detail

inline std::string render_ascii(const PlanarDiagram& d) { return detail::render_partial(d.bot(), d.top(), d.partner()); }

}  // namespace tlcat
