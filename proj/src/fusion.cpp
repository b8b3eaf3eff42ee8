#include "nisub/fusion.hpp"

#include "nisub/error.hpp"
#include "line_reader.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

namespace nisub {

FusionRing::FusionRing(Data data) : d_(std::move(data)) {
  const size_t n = d_.labels.size();
  if (n == 0) throw PreconditionError("fusion ring must have at least one label");
  if (d_.rules.size() != n * n) throw PreconditionError("fusion rule table has wrong size");
  if (d_.dual.size() != n) throw PreconditionError("dual table has wrong size");
  if (d_.unit >= n) throw PreconditionError("unit label out of range");
  std::set<std::string> names(d_.labels.begin(), d_.labels.end());
  if (names.size() != n) throw PreconditionError("fusion ring labels must be distinct");
  for (auto& rule : d_.rules) {
    std::map<size_t, uint64_t> merged;
    for (const auto& [k, c] : rule) {
      if (k >= n) throw PreconditionError("fusion rule refers to an unknown label");
      merged[k] += c;
    }
    rule.clear();
    for (const auto& [k, c] : merged) {
      if (c != 0) rule.emplace_back(k, c);
    }
  }
  auto name = [&](size_t i) { return d_.labels[i]; };
  for (size_t i = 0; i < n; ++i) {
    if (d_.dual[i] >= n || d_.dual[d_.dual[i]] != i) throw PreconditionError("dual is not an involution at " + name(i));
    std::vector<std::pair<size_t, uint64_t>> just{{i, 1}};
    if (rule(d_.unit, i) != just || rule(i, d_.unit) != just) throw PreconditionError("unit law fails at " + name(i));
    for (size_t j = 0; j < n; ++j) {
      if (coefficient(i, j, d_.unit) != (j == d_.dual[i] ? 1u : 0u)) {
        throw PreconditionError("rigidity fails at (" + name(i) + ", " + name(j) + ")");
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        std::vector<uint64_t> left(n, 0), right(n, 0);
        for (const auto& [m, c] : rule(i, j))
          for (const auto& [t, c2] : rule(m, k)) left[t] += c * c2;
        for (const auto& [m, c] : rule(j, k))
          for (const auto& [t, c2] : rule(i, m)) right[t] += c * c2;
        if (left != right) throw PreconditionError("associativity fails at (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
      }
}

uint64_t FusionRing::coefficient(size_t i, size_t j, size_t k) const {
  for (const auto& [m, c] : rule(i, j)) {
    if (m == k) return c;
  }
  return 0;
}

std::optional<size_t> FusionRing::find(const std::string& label) const {
  auto it = std::find(d_.labels.begin(), d_.labels.end(), label);
  if (it == d_.labels.end()) return std::nullopt;
  return static_cast<size_t>(it - d_.labels.begin());
}

FObject FObject::zero(const FusionPtr& ring) { return {ring, std::vector<uint64_t>(ring->rank(), 0)}; }

FObject FObject::basis(const FusionPtr& ring, size_t label, uint64_t count) {
  if (label >= ring->rank()) throw PreconditionError("FObject::basis: label out of range");
  FObject x = zero(ring);
  x.mult[label] = count;
  return x;
}

FObject FObject::operator+(const FObject& o) const {
  if (ring != o.ring) throw PreconditionError("FObject sum: objects of different rings");
  FObject out = *this;
  for (size_t i = 0; i < mult.size(); ++i) out.mult[i] += o.mult[i];
  return out;
}

namespace {
void same_ring(const FObject& x, const FObject& y, const char* what) {
  if (!x.ring || x.ring != y.ring) throw PreconditionError(std::string(what) + ": objects of different rings");
}
}  // namespace

FObject ring_multiply(const FObject& x, const FObject& y) {
  same_ring(x, y, "ring_multiply");
  FObject out = FObject::zero(x.ring);
  const FusionRing& r = *x.ring;
  for (size_t i = 0; i < r.rank(); ++i) {
    if (x.mult[i] == 0) continue;
    for (size_t j = 0; j < r.rank(); ++j) {
      if (y.mult[j] == 0) continue;
      for (const auto& [k, c] : r.rule(i, j)) out.mult[k] += x.mult[i] * y.mult[j] * c;
    }
  }
  return out;
}

uint64_t hom_dim(const FObject& x, const FObject& y) {
  same_ring(x, y, "hom_dim");
  uint64_t s = 0;
  for (size_t i = 0; i < x.mult.size(); ++i) s += x.mult[i] * y.mult[i];
  return s;
}

FObject conjugate(const FObject& x) {
  FObject out = FObject::zero(x.ring);
  for (size_t i = 0; i < x.mult.size(); ++i) out.mult[x.ring->dual(i)] += x.mult[i];
  return out;
}

FusionPtr group_fusion_ring(const Group& g) {
  FusionRing::Data d;
  const size_t n = g.order();
  d.labels = g.labels();
  d.rules.resize(n * n);
  d.dual.resize(n);
  d.unit = g.identity();
  for (Element a = 0; a < n; ++a) {
    d.dual[a] = g.inverse(a);
    for (Element b = 0; b < n; ++b) d.rules[a * n + b] = {{g.mul(a, b), 1}};
  }
  d.name = "fusion(" + (g.name().empty() ? std::string("G") : g.name()) + ")";
  return std::make_shared<const FusionRing>(std::move(d));
}

std::optional<std::array<size_t, 3>> frobenius_violation(const FusionRing& r) {
  // A non-owning handle is enough for these scratch objects.
  FusionPtr ring(std::shared_ptr<const FusionRing>{}, &r);
  const size_t n = r.rank();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      FObject xy = ring_multiply(FObject::basis(ring, x), FObject::basis(ring, y));
      for (size_t z = 0; z < n; ++z) {
        FObject bz = FObject::basis(ring, z);
        uint64_t lhs = hom_dim(xy, bz);
        uint64_t mid = hom_dim(FObject::basis(ring, x), ring_multiply(bz, FObject::basis(ring, r.dual(y))));
        uint64_t rhs = hom_dim(FObject::basis(ring, y), ring_multiply(FObject::basis(ring, r.dual(x)), bz));
        if (lhs != mid || lhs != rhs) return std::array<size_t, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Principal graphs

PrincipalGraph::PrincipalGraph(std::vector<std::string> even, std::vector<std::string> odd,
                               std::vector<std::vector<uint64_t>> adjacency, size_t star, std::string name)
    : even_(std::move(even)), odd_(std::move(odd)), adj_(std::move(adjacency)), star_(star), name_(std::move(name)) {
  if (even_.empty()) throw PreconditionError("principal graph needs an even vertex");
  if (adj_.size() != even_.size()) throw PreconditionError("adjacency must have one row per even vertex");
  for (const auto& row : adj_) {
    if (row.size() != odd_.size()) throw PreconditionError("adjacency must have one column per odd vertex");
  }
  std::set<std::string> names(even_.begin(), even_.end());
  names.insert(odd_.begin(), odd_.end());
  if (names.size() != even_.size() + odd_.size()) throw PreconditionError("vertex names must be distinct");
  if (star_ >= even_.size()) throw PreconditionError("star must be an even vertex");
  if (std::all_of(adj_[star_].begin(), adj_[star_].end(), [](uint64_t m) { return m == 0; })) {
    throw PreconditionError("star vertex has no edge");
  }
}

std::optional<size_t> PrincipalGraph::find_even(const std::string& v) const {
  auto it = std::find(even_.begin(), even_.end(), v);
  if (it == even_.end()) return std::nullopt;
  return static_cast<size_t>(it - even_.begin());
}

std::vector<std::optional<size_t>> PrincipalGraph::distances_from_star() const {
  const size_t ne = even_.size(), no = odd_.size();
  std::vector<std::optional<size_t>> dist(ne + no);
  std::deque<size_t> queue{star_};
  dist[star_] = 0;
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    auto visit = [&](size_t w) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    };
    if (v < ne) {
      for (size_t o = 0; o < no; ++o) {
        if (adj_[v][o] != 0) visit(ne + o);
      }
    } else {
      for (size_t e = 0; e < ne; ++e) {
        if (adj_[e][v - ne] != 0) visit(e);
      }
    }
  }
  return dist;
}

bool PrincipalGraph::is_connected() const {
  auto d = distances_from_star();
  return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

PrincipalGraph crossed_product_graph(const Group& g) {
  std::vector<std::string> even;
  std::vector<std::vector<uint64_t>> adj;
  for (Element a = 0; a < g.order(); ++a) {
    even.push_back("gamma[" + g.label(a) + "]");
    adj.push_back({1});
  }
  return PrincipalGraph(std::move(even), {"rho"}, std::move(adj), g.identity(),
                        "crossed(" + (g.name().empty() ? std::string("G") : g.name()) + ")");
}

PrincipalGraph e6_graph() {
  // rows *, b, theta; columns a, c, d
  return PrincipalGraph({"*", "b", "theta"}, {"a", "c", "d"}, {{1, 0, 0}, {1, 1, 1}, {0, 1, 0}}, 0, "E6");
}

Integer multiplicity_in_power(const PrincipalGraph& g, size_t v, size_t k) {
  const size_t ne = g.even().size(), no = g.odd().size();
  if (v >= ne) throw PreconditionError("multiplicity_in_power: not an even vertex");
  // Walk matrix W = L L^T on even vertices; propagate the star row k times.
  std::vector<std::vector<Integer>> w(ne, std::vector<Integer>(ne));
  for (size_t a = 0; a < ne; ++a)
    for (size_t b = 0; b < ne; ++b)
      for (size_t o = 0; o < no; ++o) w[a][b] += Integer(g.adjacency()[a][o]) * Integer(g.adjacency()[b][o]);
  std::vector<Integer> row(ne);
  row[g.star()] = 1;
  for (size_t step = 0; step < k; ++step) {
    std::vector<Integer> next(ne);
    for (size_t a = 0; a < ne; ++a) {
      if (row[a] == 0) continue;
      for (size_t b = 0; b < ne; ++b) next[b] += row[a] * w[a][b];
    }
    row = std::move(next);
  }
  return row[v];
}

size_t depth_from_star(const PrincipalGraph& g) {
  size_t depth = 0;
  for (const auto& d : g.distances_from_star()) {
    if (!d) throw PreconditionError("depth_from_star: graph is disconnected");
    depth = std::max(depth, *d);
  }
  return depth;
}

ScreenVerdict strongly_outer_screen(const PrincipalGraph& g, size_t v, size_t kmax) {
  if (v >= g.even().size()) throw PreconditionError("strongly_outer_screen: not an even vertex");
  if (kmax == 0) throw PreconditionError("strongly_outer_screen: kmax must be positive");
  ScreenVerdict out;
  out.kmax = kmax;
  for (size_t k = 1; k <= kmax; ++k) {
    if (multiplicity_in_power(g, v, k) > 0) {
      out.appears = true;
      out.k = k;
      return out;
    }
  }
  return out;
}

size_t default_screen_bound(const PrincipalGraph& g) { return g.even().size(); }

GroupTypeCounts group_type_counts(const Subgroup& a, const Subgroup& b, const Subgroup& h) {
  if (a.parent() != b.parent() || a.parent() != h.parent()) throw PreconditionError("group_type_counts: subgroups of different groups");
  if (!h.is_subgroup_of(b)) throw PreconditionError("group_type_counts: H is not contained in B");
  if ((a.members() & b.members()).size() != 1) throw PreconditionError("group_type_counts: A and B intersect nontrivially");
  const Group& g = a.group();
  ElementSet ah = product_set(g, a.members(), h.members());
  ElementSet ba = product_set(g, b.members(), a.members());
  ElementSet ha = product_set(g, h.members(), a.members());
  return {(ah & ba).size(), (ah & ha).size()};
}

// ---------------------------------------------------------------------------
// Text formats

void write_graph(std::ostream& out, const PrincipalGraph& g) {
  out << "nisub-graph 1\n";
  if (!g.name().empty()) out << "name " << g.name() << "\n";
  out << "even";
  for (const auto& v : g.even()) out << " " << detail::quote_token(v);
  out << "\nodd";
  for (const auto& v : g.odd()) out << " " << detail::quote_token(v);
  out << "\nstar " << detail::quote_token(g.even()[g.star()]) << "\n";
  for (size_t e = 0; e < g.even().size(); ++e)
    for (size_t o = 0; o < g.odd().size(); ++o) {
      uint64_t m = g.adjacency()[e][o];
      if (m == 0) continue;
      out << "edge " << detail::quote_token(g.even()[e]) << " " << detail::quote_token(g.odd()[o]);
      if (m != 1) out << " " << m;
      out << "\n";
    }
  out << "end\n";
}

namespace {

uint64_t parse_count(const std::string& w, size_t line) {
  size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(w, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != w.size() || w.empty() || w[0] == '-') throw ParseError("expected a nonnegative integer, got '" + w + "'", line);
  return v;
}

void expect_header(detail::LineReader& r, const std::string& magic) {
  std::vector<std::string> w;
  if (!r.next(w) || w.size() != 2 || w[0] != magic) throw ParseError("expected header '" + magic + " 1'", r.line);
  if (w[1] != "1") throw ParseError("unsupported format version " + w[1], r.line);
}

}  // namespace

PrincipalGraph read_graph(std::istream& in) {
  detail::LineReader r{in};
  expect_header(r, "nisub-graph");
  std::vector<std::string> even, odd, w;
  std::string name, star;
  size_t star_line = 0;
  std::vector<std::tuple<std::string, std::string, uint64_t, size_t>> edges;
  bool ended = false;
  while (r.next(w)) {
    if (w[0] == "end") {
      ended = true;
      break;
    } else if (w[0] == "name") {
      name = detail::join_from(w, 1);
    } else if (w[0] == "even") {
      even.insert(even.end(), w.begin() + 1, w.end());
    } else if (w[0] == "odd") {
      odd.insert(odd.end(), w.begin() + 1, w.end());
    } else if (w[0] == "star") {
      if (w.size() != 2) throw ParseError("'star' expects one vertex", r.line);
      star = w[1];
      star_line = r.line;
    } else if (w[0] == "edge") {
      if (w.size() != 3 && w.size() != 4) throw ParseError("'edge' expects two vertices and an optional multiplicity", r.line);
      edges.emplace_back(w[1], w[2], w.size() == 4 ? parse_count(w[3], r.line) : 1, r.line);
    } else {
      throw ParseError("unknown record '" + w[0] + "'", r.line);
    }
  }
  if (!ended) throw ParseError("missing 'end'", r.line);
  auto index_of = [](const std::vector<std::string>& vs, const std::string& v) -> std::optional<size_t> {
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) return std::nullopt;
    return static_cast<size_t>(it - vs.begin());
  };
  std::vector<std::vector<uint64_t>> adj(even.size(), std::vector<uint64_t>(odd.size(), 0));
  for (const auto& [a, b, m, line] : edges) {
    auto ea = index_of(even, a), ob = index_of(odd, b);
    if (!ea || !ob) {
      ea = index_of(even, b);
      ob = index_of(odd, a);
    }
    if (!ea || !ob) throw ParseError("edge " + a + " - " + b + " must join an even and an odd vertex", line);
    adj[*ea][*ob] += m;
  }
  if (star.empty()) throw ParseError("missing 'star'", r.line);
  auto s = index_of(even, star);
  if (!s) throw ParseError("star '" + star + "' is not an even vertex", star_line);
  try {
    return PrincipalGraph(std::move(even), std::move(odd), std::move(adj), *s, std::move(name));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), r.line);
  }
}

void write_fusion_ring(std::ostream& out, const FusionRing& r) {
  out << "nisub-fusion 1\n";
  if (!r.name().empty()) out << "name " << r.name() << "\n";
  out << "labels";
  auto q = [&](size_t i) { return detail::quote_token(r.label(i)); };
  for (size_t i = 0; i < r.rank(); ++i) out << " " << q(i);
  out << "\nunit " << q(r.unit()) << "\n";
  for (size_t i = 0; i < r.rank(); ++i) out << "dual " << q(i) << " " << q(r.dual(i)) << "\n";
  for (size_t i = 0; i < r.rank(); ++i)
    for (size_t j = 0; j < r.rank(); ++j)
      for (const auto& [k, c] : r.rule(i, j)) out << "rule " << q(i) << " " << q(j) << " " << q(k) << " " << c << "\n";
  out << "end\n";
}

FusionRing read_fusion_ring(std::istream& in) {
  detail::LineReader r{in};
  expect_header(r, "nisub-fusion");
  FusionRing::Data d;
  std::vector<std::string> w;
  std::vector<std::pair<std::vector<std::string>, size_t>> pending;
  std::string unit;
  bool ended = false;
  while (r.next(w)) {
    if (w[0] == "end") {
      ended = true;
      break;
    } else if (w[0] == "name") {
      d.name = detail::join_from(w, 1);
    } else if (w[0] == "labels") {
      if (!d.labels.empty()) throw ParseError("duplicate 'labels'", r.line);
      d.labels.assign(w.begin() + 1, w.end());
    } else if (w[0] == "unit" || w[0] == "dual" || w[0] == "rule") {
      pending.emplace_back(w, r.line);
    } else {
      throw ParseError("unknown record '" + w[0] + "'", r.line);
    }
  }
  if (!ended) throw ParseError("missing 'end'", r.line);
  const size_t n = d.labels.size();
  if (n == 0) throw ParseError("missing 'labels'", r.line);
  auto label = [&](const std::string& l, size_t line) {
    auto it = std::find(d.labels.begin(), d.labels.end(), l);
    if (it == d.labels.end()) throw ParseError("unknown label '" + l + "'", line);
    return static_cast<size_t>(it - d.labels.begin());
  };
  d.rules.resize(n * n);
  d.dual.assign(n, n);
  bool have_unit = false;
  for (const auto& [rec, line] : pending) {
    if (rec[0] == "unit") {
      if (rec.size() != 2) throw ParseError("'unit' expects one label", line);
      d.unit = label(rec[1], line);
      have_unit = true;
    } else if (rec[0] == "dual") {
      if (rec.size() != 3) throw ParseError("'dual' expects two labels", line);
      d.dual[label(rec[1], line)] = label(rec[2], line);
    } else {
      if (rec.size() != 5) throw ParseError("'rule' expects three labels and a count", line);
      d.rules[label(rec[1], line) * n + label(rec[2], line)].emplace_back(label(rec[3], line), parse_count(rec[4], line));
    }
  }
  if (!have_unit) throw ParseError("missing 'unit'", r.line);
  for (size_t i = 0; i < n; ++i) {
    if (d.dual[i] == n) throw ParseError("missing 'dual' for " + d.labels[i], r.line);
  }
  try {
    return FusionRing(std::move(d));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), r.line);
  }
}

}  // namespace nisub
