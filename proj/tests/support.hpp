#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tdim/fuzz.hpp"
#include "tdim/hierarchy.hpp"
#include "tdim/mesh_io.hpp"

namespace test {

using tdim::Rational;

inline std::vector<Rational> lines(int count, int start = 0) {
  std::vector<Rational> v;
  for (int i = 0; i < count; ++i) v.emplace_back(start + i);
  return v;
}

inline Rational q(const char* s) { return tdim::parse_rational(s); }

// mpq_class(p, q) does not reduce; everything downstream expects canonical values.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string fixture(const std::string& name) { return std::string(TDIM_FIXTURES) + "/" + name + ".json"; }
inline tdim::HMesh load_hmesh(const std::string& name) { return tdim::hmesh_from_json(tdim::load_json(fixture(name))); }
inline tdim::TMesh load_tmesh(const std::string& name) { return tdim::mesh_from_json(tdim::load_json(fixture(name))); }

inline tdim::HMesh random_hmesh(std::uint64_t seed, tdim::Division div, int max_level, int max_level0, bool n2) {
  tdim::FuzzConfig cfg;
  cfg.division = div;
  cfg.max_level = max_level;
  cfg.max_level0 = max_level0;
  cfg.require_n2 = n2;
  return tdim::random_hmesh(seed, cfg);
}

// Closed axis-aligned segments meet (including touching at an end).
inline bool segments_meet(const tdim::TMesh& m, int a, int b) {
  const auto& la = m.ledges()[a];
  const auto& lb = m.ledges()[b];
  auto [a0, a1] = m.ledge_extent(a);
  auto [b0, b1] = m.ledge_extent(b);
  if (la.axis == lb.axis) return la.line == lb.line && a0 <= b1 && b0 <= a1;
  return a0 <= lb.line && lb.line <= a1 && b0 <= la.line && la.line <= b1;
}

// Components of a set of l-edges by pairwise geometric intersection.
inline std::set<std::set<int>> geometric_components(const tdim::TMesh& m, const std::vector<int>& ids) {
  std::vector<int> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (segments_meet(m, ids[i], ids[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::map<int, std::set<int>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[find(static_cast<int>(i))].insert(ids[i]);
  std::set<std::set<int>> out;
  for (auto& [r, g] : groups) out.insert(g);
  return out;
}

// Parent cells crossed: sample the l-edge at every fine-edge midpoint and collect containing cells.
inline int crossing_count_by_sampling(const tdim::TMesh& stage, const tdim::TMesh& fine, int ledge) {
  const auto& l = fine.ledges()[ledge];
  auto params = fine.ledge_params(ledge);
  std::set<int> hit;
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    Rational mid = (params[k] + params[k + 1]) / 2;
    Rational x = l.axis == tdim::Axis::Horizontal ? mid : l.line;
    Rational y = l.axis == tdim::Axis::Horizontal ? l.line : mid;
    for (std::size_t c = 0; c < stage.cells().size(); ++c) {
      const auto& r = stage.cells()[c];
      if (r.x0 < x && x < r.x1 && r.y0 < y && y < r.y1) hit.insert(static_cast<int>(c));
    }
  }
  return static_cast<int>(hit.size());
}

}  // namespace test
