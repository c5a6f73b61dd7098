#ifndef DRG_CATALOG_HPP
#define DRG_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "intersection_array.hpp"

namespace drg {

struct CatalogEntry {
  std::string id;
  IntersectionArray array;
  std::function<ConcreteGraph()> build;  // empty for array-only entries
  std::string note;
  bool primitive = false;  // attested: every distance-i graph is connected

  bool has_graph() const { return static_cast<bool>(build); }
};

inline const std::vector<CatalogEntry>& catalog()
{
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    e.push_back({"petersen", IntersectionArray({3, 2}, {1, 1}), petersen_graph, "Kneser K(5,2)", true});
    e.push_back({"johnson-5-2", johnson_array(5, 2), [] { return johnson_graph(5, 2); }, "triangular graph T(5)", true});
    e.push_back({"johnson-8-3", johnson_array(8, 3), [] { return johnson_graph(8, 3); }, "J(8,3), 56 vertices", true});
    e.push_back({"johnson-30-3", johnson_array(30, 3), nullptr, "J(30,3), array only", true});
    e.push_back({"hamming-2-3", hamming_array(2, 3), [] { return hamming_graph(2, 3); }, "3x3 rook graph", true});
    e.push_back({"hamming-3-3", hamming_array(3, 3), [] { return hamming_graph(3, 3); }, "H(3,3), 27 vertices", true});
    e.push_back({"cube", hamming_array(3, 2), cube_graph, "H(3,2), bipartite and antipodal", false});
    e.push_back({"heawood", IntersectionArray({3, 2, 2}, {1, 1, 3}), heawood_graph, "Fano incidence graph", false});
    e.push_back({"icosahedron", IntersectionArray({5, 2, 1}, {1, 2, 5}), icosahedron_graph, "antipodal double cover of K_6",
                 false});
    e.push_back({"octagon", IntersectionArray({2, 1, 1, 1}, {1, 1, 1, 2}), [] { return cycle_graph(8); }, "C_8", false});
    e.push_back({"cocktail-3", cocktail_party_array(3), [] { return cocktail_party_graph(3); }, "K_{3x2}", false});
    e.push_back({"crown-4", IntersectionArray({3, 2, 1}, {1, 2, 3}), [] { return crown_graph(4); },
                 "K_{4,4} minus a perfect matching (isomorphic to the cube)", false});
    return e;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog(const std::string& id)
{
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

namespace detail {

inline std::vector<int> dash_params(const std::string& name, const std::string& prefix)
{
  std::vector<int> out;
  std::string rest = name.substr(prefix.size());
  std::size_t pos = 0;
  while (pos < rest.size()) {
    if (rest[pos] != '-') return {};
    std::size_t end = rest.find('-', pos + 1);
    const std::string part = rest.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) return {};
    out.push_back(std::stoi(part));
    pos = end == std::string::npos ? rest.size() : end;
  }
  return out;
}

}  // namespace detail

/// Concrete graph by name: catalog ids, plus johnson-m-d, hamming-d-q,
/// cocktail-m, crown-m, cycle-n and complete-n.
inline std::optional<ConcreteGraph> named_graph(const std::string& name)
{
  if (const auto* e = find_catalog(name); e && e->has_graph()) return e->build();
  struct Family {
    const char* prefix;
    std::size_t arity;
    std::function<ConcreteGraph(const std::vector<int>&)> make;
  };
  const std::vector<Family> families{
      {"johnson", 2, [](const std::vector<int>& p) { return johnson_graph(p[0], p[1]); }},
      {"hamming", 2, [](const std::vector<int>& p) { return hamming_graph(p[0], p[1]); }},
      {"cocktail", 1, [](const std::vector<int>& p) { return cocktail_party_graph(p[0]); }},
      {"crown", 1, [](const std::vector<int>& p) { return crown_graph(p[0]); }},
      {"cycle", 1, [](const std::vector<int>& p) { return cycle_graph(p[0]); }},
      {"complete", 1, [](const std::vector<int>& p) { return complete_graph(p[0]); }},
  };
  for (const auto& f : families) {
    const std::string prefix = f.prefix;
    if (name.rfind(prefix + "-", 0) != 0) continue;
    auto params = detail::dash_params(name, prefix);
    if (params.size() != f.arity) fail(ErrorCode::ParseError, "expected " + prefix + " with " +
                                                                 std::to_string(f.arity) + " parameter(s): " + name);
    return f.make(params);
  }
  return std::nullopt;
}

}  // namespace drg

#endif  // DRG_CATALOG_HPP
