#include "tdim/ledge_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tdim {

LEdgeSet LEdgeSet::from_mesh(const TMesh& mesh, std::span<const int> ledge_ids,
                             const std::function<bool(int)>& keep) {
  std::vector<LEdgeRef> out;
  out.reserve(ledge_ids.size());
  for (int id : ledge_ids) {
    const LEdge& l = mesh.ledges()[id];
    LEdgeRef ref;
    ref.axis = l.axis;
    ref.source = id;
    for (int v : l.vertices) {
      if (keep && !keep(v)) continue;
      ref.vertices.push_back(v);
      const Point& p = mesh.vertices()[v];
      ref.params.push_back(l.axis == Axis::Horizontal ? p.x : p.y);
    }
    out.push_back(std::move(ref));
  }
  return LEdgeSet(std::move(out));
}

LEdgeSet LEdgeSet::tledges(const TMesh& mesh) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < mesh.ledges().size(); ++i)
    if (mesh.ledges()[i].type == LEdgeType::TLEdge) ids.push_back(static_cast<int>(i));
  return from_mesh(mesh, ids);
}

LEdgeSet LEdgeSet::all(const TMesh& mesh) {
  std::vector<int> ids(mesh.ledges().size());
  std::iota(ids.begin(), ids.end(), 0);
  return from_mesh(mesh, ids);
}

std::vector<int> LEdgeSet::vertex_ids() const {
  std::vector<int> ids;
  for (const auto& l : ledges_) ids.insert(ids.end(), l.vertices.begin(), l.vertices.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

LEdgeSet LEdgeSet::subset(std::span<const int> indices) const {
  std::vector<LEdgeRef> out;
  for (int i : indices) out.push_back(ledges_[i]);
  return LEdgeSet(std::move(out));
}

LEdgeSet LEdgeSet::without_vertices(const std::set<int>& removed) const {
  std::vector<LEdgeRef> out;
  for (const auto& l : ledges_) {
    LEdgeRef r;
    r.axis = l.axis;
    r.source = l.source;
    for (std::size_t k = 0; k < l.vertices.size(); ++k) {
      if (removed.count(l.vertices[k])) continue;
      r.vertices.push_back(l.vertices[k]);
      r.params.push_back(l.params[k]);
    }
    out.push_back(std::move(r));
  }
  return LEdgeSet(std::move(out));
}

std::vector<std::vector<int>> LEdgeSet::components() const {
  const int n = static_cast<int>(ledges_.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> owner;
  for (int i = 0; i < n; ++i)
    for (int v : ledges_[i].vertices) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tdim
