#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "approxroots/branch.hpp"
#include "approxroots/errors.hpp"
#include "approxroots/series.hpp"

namespace approxroots {

// Local coordinate axis carried by an exceptional component through the
// current center: U means the component is {u = 0}, V means {v = 0}.
enum class Axis { U, V };

struct Vertex {
  long id = 0;
  long creationIndex = 0;
  long phi = 0;  // multiplicity of the total transform of f along the component
  long mu = 0;   // same for a generic smooth line through the origin
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// One blow-up of the sequence, as seen from the branch being resolved.
struct Center {
  long multiplicity = 0;
  bool swapped = false;   // roles of u and v exchanged before blowing up
  Rational direction;     // the branch continues at v/u = direction
  std::vector<std::pair<long, Axis>> through;  // components through the center (after the swap)
  long vertex = 0;        // component created by this blow-up
};

struct DualGraph {
  std::vector<Vertex> vertices;             // in creation order, ids 1, 2, ...
  std::set<std::pair<long, long>> edges;    // (smaller id, larger id)
  std::map<std::string, long> arrowheads;   // curve label -> vertex met by its strict transform
  std::vector<long> horizontal;             // path from L_0 to the vertex carrying f
  std::vector<std::vector<long>> vertical;  // each from its free end towards the horizontal path
  std::vector<long> L;                      // L_0, free ends L_1..L_g, L_{g+1}
  std::vector<Center> centers;

  const Vertex& vertex(long id) const { return vertices.at(static_cast<std::size_t>(id - 1)); }
  std::vector<long> neighbors(long id) const {
    std::vector<long> out;
    for (const auto& [a, b] : edges) {
      if (a == id) out.push_back(b);
      if (b == id) out.push_back(a);
    }
    return out;
  }
  std::vector<long> multiplicity_sequence() const {
    std::vector<long> out;
    for (const auto& c : centers) out.push_back(c.multiplicity);
    return out;
  }
  bool is_tree() const {
    if (vertices.empty()) return edges.empty();
    if (edges.size() + 1 != vertices.size()) return false;
    std::set<long> seen{1};
    std::vector<long> stack{1};
    while (!stack.empty()) {
      const long v = stack.back();
      stack.pop_back();
      for (long w : neighbors(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices.size();
  }
};

namespace detail {

inline std::optional<std::size_t> order_of(const QSeries& s) { return s.valuation(); }

inline bool less_order(const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

inline Axis flip(Axis a) { return a == Axis::U ? Axis::V : Axis::U; }

inline void link(DualGraph& g, long a, long b) { g.edges.insert({std::min(a, b), std::max(a, b)}); }
inline void unlink(DualGraph& g, long a, long b) { g.edges.erase({std::min(a, b), std::max(a, b)}); }

// Fills the horizontal path, the vertical chains and L_0..L_{g+1}.
inline void analyze_segments(DualGraph& g) {
  g.horizontal.clear();
  g.vertical.clear();
  g.L.clear();
  if (g.vertices.empty()) return;
  const long target = g.arrowheads.at("f");
  // Path 1 -> target by parent pointers from a traversal rooted at 1.
  std::map<long, long> parent{{1, 0}};
  std::vector<long> stack{1};
  while (!stack.empty()) {
    const long v = stack.back();
    stack.pop_back();
    for (long w : g.neighbors(v))
      if (parent.emplace(w, v).second) stack.push_back(w);
  }
  for (long v = target; v != 0; v = parent.at(v)) g.horizontal.push_back(v);
  std::reverse(g.horizontal.begin(), g.horizontal.end());
  const std::set<long> on_path(g.horizontal.begin(), g.horizontal.end());

  for (long h : g.horizontal) {
    std::vector<long> roots;
    for (long w : g.neighbors(h))
      if (!on_path.count(w)) roots.push_back(w);
    std::sort(roots.begin(), roots.end());
    for (long start : roots) {
      std::vector<long> chain{start};
      long prev = h, cur = start;
      for (;;) {
        long next = 0;
        for (long w : g.neighbors(cur))
          if (w != prev) next = w;
        if (next == 0) break;
        chain.push_back(next);
        prev = cur;
        cur = next;
      }
      std::reverse(chain.begin(), chain.end());
      g.vertical.push_back(std::move(chain));
    }
  }
  g.L.push_back(g.horizontal.front());
  for (const auto& chain : g.vertical) g.L.push_back(chain.front());
  g.L.push_back(target);
}

inline DualGraph resolve_at_precision(const Parameterization& p, std::size_t precision) {
  QSeries u(XPoly::monomial(Rational(1), static_cast<std::size_t>(p.n)));
  QSeries v(p.y);
  std::vector<std::pair<long, Axis>> through;
  DualGraph g;
  for (std::size_t step = 0;; ++step) {
    auto ou = order_of(u), ov = order_of(v);
    const std::size_t m = less_order(ov, ou) ? *ov : *ou;
    if (step == 0 && m == 1) throw SmoothBranch("the branch is smooth; its resolution is empty");
    if (m == 1 && through.size() == 1) {
      const auto axis_order = through[0].second == Axis::U ? ou : ov;
      if (axis_order && *axis_order == 1) {
        g.arrowheads["f"] = through[0].first;
        break;
      }
    }
    Center c;
    c.multiplicity = static_cast<long>(m);
    c.swapped = less_order(ov, ou);
    if (c.swapped) {
      std::swap(u, v);
      std::swap(ou, ov);
      for (auto& t : through) t.second = flip(t.second);
    }
    if (ov && *ov == *ou) c.direction = v[*ov] / u[*ou];
    c.through = through;

    Vertex nv;
    nv.id = nv.creationIndex = static_cast<long>(g.vertices.size()) + 1;
    nv.phi = static_cast<long>(m);
    nv.mu = step == 0 ? 1 : 0;
    for (const auto& [id, axis] : through) {
      nv.phi += g.vertex(id).phi;
      nv.mu += g.vertex(id).mu;
      link(g, nv.id, id);
    }
    if (through.size() == 2) unlink(g, through[0].first, through[1].first);
    g.vertices.push_back(nv);
    c.vertex = nv.id;

    std::vector<std::pair<long, Axis>> next{{nv.id, Axis::U}};
    for (const auto& t : through)
      if (t.second == Axis::V && is_zero(c.direction)) next.push_back(t);
    through = std::move(next);

    v = divide(v, u, precision) - QSeries(XPoly(c.direction));
    g.centers.push_back(std::move(c));
  }
  analyze_segments(g);
  return g;
}

// Runs fn(precision) with doubling precision until it stops running short.
template <class Fn>
auto with_adaptive_precision(std::size_t start, Fn fn) {
  constexpr std::size_t kMaxPrecision = std::size_t{1} << 14;
  for (std::size_t prec = std::max<std::size_t>(start, 8);; prec *= 2) {
    try {
      return fn(prec);
    } catch (const InsufficientPrecision&) {
      if (prec >= kMaxPrecision) throw;
    }
  }
}

inline std::size_t initial_precision(const Parameterization& p) {
  return static_cast<std::size_t>(p.n) + p.y.size() + 8;
}

// Where the strict transform of q leaves the strict transform of f.
struct Separation {
  const Center* center = nullptr;
  std::size_t multiplicity = 0;  // of q at that center
  bool at_infinity = false;      // q continues at u/v = 0, off the chart of f
  Rational direction;
  std::optional<std::size_t> order_u, order_v;  // of q after the swap
};

inline Separation separate(const DualGraph& g, const Parameterization& q, std::size_t precision) {
  QSeries u(XPoly::monomial(Rational(1), static_cast<std::size_t>(q.n)));
  QSeries v(q.y);
  for (const auto& c : g.centers) {
    if (c.swapped) std::swap(u, v);
    const auto ou = order_of(u), ov = order_of(v);
    Separation s;
    s.center = &c;
    s.multiplicity = less_order(ov, ou) ? *ov : *ou;
    s.order_u = ou;
    s.order_v = ov;
    s.at_infinity = less_order(ov, ou);
    if (!s.at_infinity && ov && *ov == *ou) s.direction = v[*ov] / u[*ou];
    if (s.at_infinity || s.direction != c.direction) return s;
    v = divide(v, u, precision) - QSeries(XPoly(c.direction));
  }
  throw NotResolved("q is not separated from f by the minimal resolution of f");
}

}  // namespace detail

// Minimal embedded resolution of the branch by blowing up the parameterization.
// phi(L_k) = Bbar_k of the generic sequence is checked on every result, not assumed.
inline DualGraph resolve(const Parameterization& p) {
  p.validate();
  DualGraph g = detail::with_adaptive_precision(detail::initial_precision(p),
                                                [&](std::size_t prec) { return detail::resolve_at_precision(p, prec); });
  const CharData generic = to_generic(char_sequence(p));
  if (g.L.size() != generic.Bbar.size() + 1) throw std::logic_error("dual graph has the wrong number of segments");
  for (std::size_t k = 0; k < generic.Bbar.size(); ++k)
    if (g.vertex(g.L[k]).phi != generic.Bbar[k]) throw std::logic_error("phi(L_k) differs from the semigroup generator");
  return g;
}

// The exceptional component of f's minimal resolution that the strict
// transform of q meets, smoothly and transversally, away from the others.
inline long attach(const DualGraph& g, const Parameterization& q) {
  q.validate();
  const auto s = detail::with_adaptive_precision(detail::initial_precision(q),
                                                 [&](std::size_t prec) { return detail::separate(g, q, prec); });
  if (s.multiplicity != 1) throw NotResolved("q is singular where it leaves f");
  for (const auto& [id, axis] : s.center->through) {
    if (s.at_infinity && axis == Axis::U) throw NotResolved("q passes through a double point of the divisor");
    if (!s.at_infinity && is_zero(s.direction) && axis == Axis::V)
      throw NotResolved("q passes through a double point of the divisor");
  }
  return s.center->vertex;
}

inline long attach(const Parameterization& f, const Parameterization& q) { return attach(resolve(f), q); }

// (f, q) by the projection formula: sum over components L met by the strict
// transform of q of phi(L) (L . q'). Needs q separated from f.
inline long projection_intersection(const DualGraph& g, const Parameterization& q) {
  q.validate();
  const auto s = detail::with_adaptive_precision(detail::initial_precision(q),
                                                 [&](std::size_t prec) { return detail::separate(g, q, prec); });
  const auto& c = *s.center;
  auto phi = [&](long id) { return g.vertex(id).phi; };
  auto finite = [](const std::optional<std::size_t>& o) -> long {
    if (!o) throw NotResolved("q lies on a coordinate axis of an exceptional component");
    return static_cast<long>(*o);
  };
  long total = 0;
  if (s.at_infinity) {
    // Chart (u/v, v): the new component is {v = 0}, a U-component {u/v = 0}.
    total += phi(c.vertex) * finite(s.order_v);
    for (const auto& [id, axis] : c.through)
      if (axis == Axis::U) total += phi(id) * (finite(s.order_u) - finite(s.order_v));
  } else {
    // Chart (u, v/u - direction): the new component is {u = 0}.
    total += phi(c.vertex) * finite(s.order_u);
    if (is_zero(s.direction))
      for (const auto& [id, axis] : c.through)
        if (axis == Axis::V) total += phi(id) * (finite(s.order_v) - finite(s.order_u));
  }
  return total;
}

inline void add_arrowhead(DualGraph& g, const std::string& label, long vertex) { g.arrowheads[label] = vertex; }

// Graphviz text: vertices labelled with (phi, mu), arrowheads as arrow-shaped nodes.
inline std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (const auto& v : g.vertices)
    os << "  E" << v.id << " [label=\"E" << v.id << " (" << v.phi << "," << v.mu << ")\"];\n";
  for (const auto& [a, b] : g.edges) os << "  E" << a << " -- E" << b << ";\n";
  for (const auto& [label, id] : g.arrowheads) {
    os << "  \"arrow_" << label << "\" [shape=rarrow,label=\"" << label << "\"];\n";
    os << "  \"arrow_" << label << "\" -- E" << id << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace approxroots
