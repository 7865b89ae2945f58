#include "dsmix/population.hpp"

namespace dsmix {

Population::Population(std::vector<Chromosome> members) : members_(std::move(members)) {
    for (const Chromosome& c : members_)
        index_add(c.bits());
}

void Population::replace(int i, Chromosome next) {
    Chromosome& slot = members_[static_cast<std::size_t>(i)];
    index_remove(slot.bits());
    index_add(next.bits());
    slot = std::move(next);
}

bool Population::index_consistent() const {
    std::unordered_map<BitVector, int, BitVectorHash> fresh;
    for (const Chromosome& c : members_)
        ++fresh[c.bits()];
    return fresh == index_;
}

void Population::index_add(const BitVector& bits) { ++index_[bits]; }

void Population::index_remove(const BitVector& bits) {
    auto it = index_.find(bits);
    if (it != index_.end() && --it->second == 0)
        index_.erase(it);
}

} // namespace dsmix
