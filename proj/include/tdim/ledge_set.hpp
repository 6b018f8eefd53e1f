#pragma once

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "tdim/mesh.hpp"

namespace tdim {

// One l-edge as seen by the conformality system: vertex ids plus their free coordinates.
struct LEdgeRef {
  Axis axis = Axis::Horizontal;
  std::vector<int> vertices;
  std::vector<Rational> params;
  int source = -1;  // index into the originating mesh's l-edges, if any
};

class LEdgeSet {
 public:
  LEdgeSet() = default;
  explicit LEdgeSet(std::vector<LEdgeRef> ledges) : ledges_(std::move(ledges)) {}

  // Selected l-edges of a mesh; keep(v) filters their vertex lists.
  static LEdgeSet from_mesh(const TMesh& mesh, std::span<const int> ledge_ids,
                            const std::function<bool(int)>& keep = {});
  static LEdgeSet tledges(const TMesh& mesh);
  static LEdgeSet all(const TMesh& mesh);

  const std::vector<LEdgeRef>& ledges() const { return ledges_; }
  std::size_t size() const { return ledges_.size(); }
  bool empty() const { return ledges_.empty(); }
  const LEdgeRef& operator[](std::size_t i) const { return ledges_[i]; }

  // Sorted distinct vertex ids over all l-edges.
  std::vector<int> vertex_ids() const;
  LEdgeSet subset(std::span<const int> indices) const;
  // Same l-edges with the given vertices removed from their lists.
  LEdgeSet without_vertices(const std::set<int>& removed) const;
  // Groups of l-edge indices connected through shared vertices.
  std::vector<std::vector<int>> components() const;

 private:
  std::vector<LEdgeRef> ledges_;
};

}  // namespace tdim
