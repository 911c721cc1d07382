// Finite quivers. Vertices are labeled 1..n throughout.
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace f1rep {

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
  public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    int arrow_index(const std::string& id) const;  // -1 if absent

    // Arrow indices leaving / entering a vertex.
    const std::vector<int>& arrows_from(int v) const { return from_[v - 1]; }
    const std::vector<int>& arrows_to(int v) const { return to_[v - 1]; }

    // The linear A_n quiver n -> n-1 -> ... -> 1 (arrow alpha_i: i+1 -> i)?
    bool is_linear_chain() const;
    // Underlying graph connected and acyclic?
    bool is_tree() const;

    // All nonempty vertex subsets inducing a connected subgraph, each sorted;
    // the list is ordered by size then lexicographically.
    std::vector<std::vector<int>> connected_subquivers() const;

    bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

    // The standard linear A_n quiver with arrows a1: 2->1, ..., a(n-1): n->n-1.
    static std::shared_ptr<const Quiver> linear(int n);

  private:
    int n_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> from_, to_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Vertex-indexed non-negative integers; entry v-1 belongs to vertex v.
using DimensionVector = std::vector<int>;

int total(const DimensionVector& d);

}  // namespace f1rep
