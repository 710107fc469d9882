#include "tdats/diagram.hpp"

#include <algorithm>
#include <tuple>

namespace tdats {

std::vector<DiagramFeature> PersistenceDiagram::features_of(int dim) const {
    std::vector<DiagramFeature> out;
    for (const auto& f : features) {
        if (f.dim == dim) out.push_back(f);
    }
    return out;
}

std::size_t PersistenceDiagram::count_of(int dim) const {
    std::size_t n = 0;
    for (const auto& f : features) {
        if (f.dim == dim) ++n;
    }
    return n;
}

void PersistenceDiagram::sort_canonical() {
    std::sort(features.begin(), features.end(),
              [](const DiagramFeature& a, const DiagramFeature& b) {
                  return std::make_tuple(a.dim, -a.persistence(), a.birth, a.death) <
                         std::make_tuple(b.dim, -b.persistence(), b.birth, b.death);
              });
}

}  // namespace tdats
