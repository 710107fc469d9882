#pragma once

#include <cstddef>
#include <vector>

namespace tdats {

struct DiagramFeature {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;

    double persistence() const noexcept { return death - birth; }

    friend bool operator==(const DiagramFeature&, const DiagramFeature&) = default;
};

/// Multiset of (dim, birth, death) triples plus the filtration cap.  Features
/// are kept in canonical order: dimension ascending, then persistence
/// descending, then birth ascending.
struct PersistenceDiagram {
    std::vector<DiagramFeature> features;
    double maxscale = 0.0;

    std::vector<DiagramFeature> features_of(int dim) const;
    std::size_t count_of(int dim) const;

    /// Restore canonical ordering after manual edits.
    void sort_canonical();
};

}  // namespace tdats
