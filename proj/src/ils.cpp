#include "dsmix/ils.hpp"

#include <stdexcept>

namespace dsmix {

int next_vertex(const Dsm& dsm, std::span<const int> current) {
    const int n = dsm.size();
    if (current.empty() || static_cast<int>(current.size()) >= n)
        throw std::invalid_argument("next_vertex: current set must be nonempty and not full");

    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    for (int v : current)
        inside[static_cast<std::size_t>(v)] = 1;

    int best = -1;
    double best_avg = 0.0;
    for (int j = 0; j < n; ++j) {
        if (inside[static_cast<std::size_t>(j)])
            continue;
        double sum = 0.0;
        for (int k : current)
            sum += dsm(j, k);
        const double avg = sum / static_cast<double>(current.size());
        if (best < 0 || avg > best_avg) {
            best = j;
            best_avg = avg;
        }
    }
    return best;
}

IlsGrower::IlsGrower(const Dsm& dsm, int start)
    : dsm_(&dsm),
      in_chain_(static_cast<std::size_t>(dsm.size()), 0),
      connection_(static_cast<std::size_t>(dsm.size()), 0.0) {
    chain_.reserve(static_cast<std::size_t>(dsm.size()));
    chain_.push_back(start);
    in_chain_[static_cast<std::size_t>(start)] = 1;
    for (int j = 0; j < dsm.size(); ++j)
        connection_[static_cast<std::size_t>(j)] = dsm(start, j);
}

int IlsGrower::grow() {
    const int n = dsm_->size();
    int best = -1;
    for (int j = 0; j < n; ++j) {
        if (in_chain_[static_cast<std::size_t>(j)])
            continue;
        if (best < 0 || connection_[static_cast<std::size_t>(j)] > connection_[static_cast<std::size_t>(best)])
            best = j;
    }
    chain_.push_back(best);
    in_chain_[static_cast<std::size_t>(best)] = 1;
    for (int j = 0; j < n; ++j)
        connection_[static_cast<std::size_t>(j)] += (*dsm_)(best, j);
    return best;
}

MaskSequence grow_ils(const Dsm& dsm, int start,
                      const std::function<bool(std::span<const int>)>& keep) {
    if (start < 0 || start >= dsm.size())
        throw std::invalid_argument("grow_ils: start vertex out of range");

    IlsGrower grower(dsm, start);
    int kept = 0;
    while (keep(grower.chain())) {
        kept = grower.size();
        if (grower.full())
            break;
        grower.grow();
    }
    std::vector<int> chain(grower.chain().begin(), grower.chain().begin() + kept);
    return MaskSequence(std::move(chain));
}

} // namespace dsmix
