#include "dsmix/spinglass.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dsmix {

namespace {

bool grid_adjacent(int a, int b, int side) {
    const int ra = a / side, ca = a % side;
    const int rb = b / side, cb = b % side;
    return std::abs(ra - rb) + std::abs(ca - cb) == 1;
}

} // namespace

SpinGlassInstance generate_spinglass(int side, RandomSource& rng) {
    if (side < 2)
        throw std::invalid_argument("generate_spinglass: side must be at least 2");
    SpinGlassInstance inst;
    inst.side = side;
    inst.seed = rng.seed();
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            const int a = r * side + c;
            if (c + 1 < side)
                inst.couplings.push_back({a, a + 1, rng.coin() ? 1 : -1});
            if (r + 1 < side)
                inst.couplings.push_back({a, a + side, rng.coin() ? 1 : -1});
        }
    }
    if (side <= 5)
        inst.ground_energy = -spinglass_brute_force_best(inst);
    return inst;
}

double eval_spinglass(const BitVector& x, const SpinGlassInstance& inst) {
    if (x.size() != inst.spin_count())
        throw std::invalid_argument("eval_spinglass: length mismatch");
    int sum = 0;
    for (const auto& e : inst.couplings) {
        const int sa = x.get(e.a) ? 1 : -1;
        const int sb = x.get(e.b) ? 1 : -1;
        sum += sa * sb * e.j;
    }
    return static_cast<double>(sum);
}

double spinglass_brute_force_best(const SpinGlassInstance& inst) {
    const int n = inst.spin_count();
    if (n > 25)
        throw std::invalid_argument("spinglass_brute_force_best: grid too large");
    int best = std::numeric_limits<int>::min();
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < states; ++a) {
        int sum = 0;
        for (const auto& e : inst.couplings) {
            const int sa = (a >> e.a) & 1 ? 1 : -1;
            const int sb = (a >> e.b) & 1 ? 1 : -1;
            sum += sa * sb * e.j;
        }
        best = std::max(best, sum);
    }
    return static_cast<double>(best);
}

void write_spinglass(std::ostream& out, const SpinGlassInstance& inst) {
    out << "spin " << inst.side << '\n';
    if (inst.ground_energy)
        out << "ground " << *inst.ground_energy << '\n';
    for (const auto& e : inst.couplings)
        out << e.a << ' ' << e.b << ' ' << (e.j > 0 ? "+1" : "-1") << '\n';
}

SpinGlassInstance parse_spinglass(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&line_no](const std::string& what) {
        throw std::runtime_error("spin parse error at line " + std::to_string(line_no) + ": " +
                                 what);
    };

    SpinGlassInstance inst;
    if (!std::getline(in, line))
        fail("missing header");
    ++line_no;
    {
        std::istringstream header(line);
        std::string tag;
        if (!(header >> tag >> inst.side) || tag != "spin" || inst.side < 2)
            fail("expected 'spin <side>' with side >= 2");
    }

    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string first;
        row >> first;
        if (first == "ground") {
            double energy;
            if (!(row >> energy))
                fail("expected 'ground <energy>'");
            inst.ground_energy = energy;
            continue;
        }
        int a, b, j;
        std::istringstream edge(line);
        if (!(edge >> a >> b >> j))
            fail("expected 'i j J'");
        if (a < 0 || a >= inst.spin_count() || b < 0 || b >= inst.spin_count() || a == b)
            fail("spin index out of range");
        if (j != 1 && j != -1)
            fail("coupling must be +1 or -1");
        if (!grid_adjacent(a, b, inst.side))
            fail("spins are not grid neighbors");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            fail("duplicate edge");
        inst.couplings.push_back({a, b, j});
    }
    if (inst.couplings.empty())
        fail("no couplings");
    return inst;
}

SpinGlassProblem::SpinGlassProblem(SpinGlassInstance inst, std::string name)
    : inst_(std::move(inst)), name_(std::move(name)) {
    if (name_.empty())
        name_ = "spin_n" + std::to_string(inst_.side) + "_seed" + std::to_string(inst_.seed);
}

std::optional<double> SpinGlassProblem::optimum() const {
    if (!inst_.ground_energy)
        return std::nullopt;
    return -*inst_.ground_energy;
}

} // namespace dsmix
