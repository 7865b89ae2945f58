#include "dsmix/nk.hpp"

#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dsmix {

namespace {

void validate_shape(int length, int neighbors, int step) {
    if (neighbors < 1)
        throw std::invalid_argument("nk: neighbors must be at least 1");
    if (step < 1 || step > neighbors + 1)
        throw std::invalid_argument("nk: step must lie in [1, neighbors+1]");
    if (length < neighbors + 1)
        throw std::invalid_argument("nk: length must be at least neighbors+1");
    if ((length - neighbors - 1) % step != 0)
        throw std::invalid_argument("nk: (length - neighbors - 1) must be divisible by step");
}

} // namespace

NkInstance generate_nk(int length, int neighbors, int step, RandomSource& rng) {
    validate_shape(length, neighbors, step);
    NkInstance inst;
    inst.length = length;
    inst.neighbors = neighbors;
    inst.step = step;
    inst.seed = rng.seed();
    const int count = inst.subfunction_count();
    const std::size_t rows = static_cast<std::size_t>(count);
    const std::size_t cols = std::size_t{1} << inst.arity();
    inst.tables.assign(rows, std::vector<double>(cols));
    for (auto& table : inst.tables)
        for (double& v : table)
            v = rng.uniform_real01();
    return inst;
}

double eval_nk(const BitVector& x, const NkInstance& inst) {
    if (x.size() != inst.length)
        throw std::invalid_argument("eval_nk: length mismatch");
    const int arity = inst.arity();
    double f = 0.0;
    for (int i = 0; i < inst.subfunction_count(); ++i) {
        const int start = inst.window_start(i);
        unsigned idx = 0;
        for (int j = 0; j < arity; ++j)
            idx = (idx << 1) | static_cast<unsigned>(x.get(start + j));
        f += inst.tables[static_cast<std::size_t>(i)][idx];
    }
    return f;
}

NkOptimum nk_exact_optimum(const NkInstance& inst) {
    validate_shape(inst.length, inst.neighbors, inst.step);
    const int arity = inst.arity();
    const int overlap = arity - inst.step; // bits shared with the next window
    const int count = inst.subfunction_count();
    const unsigned states = 1u << overlap;
    const unsigned windows = 1u << arity;
    const unsigned state_mask = states - 1;

    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    std::vector<double> dp(states, kNegInf);
    // Per subfunction and reachable state: the window contents that achieved it.
    std::vector<std::vector<unsigned>> chosen(
        static_cast<std::size_t>(count), std::vector<unsigned>(states, 0));

    for (unsigned w = 0; w < windows; ++w) {
        const double v = inst.tables[0][w];
        const unsigned ns = w & state_mask;
        if (v > dp[ns]) {
            dp[ns] = v;
            chosen[0][ns] = w;
        }
    }

    std::vector<double> next(states);
    std::vector<std::vector<unsigned>> parents(
        static_cast<std::size_t>(count), std::vector<unsigned>(states, 0));
    const unsigned fresh = 1u << inst.step;
    for (int i = 1; i < count; ++i) {
        std::fill(next.begin(), next.end(), kNegInf);
        for (unsigned st = 0; st < states; ++st) {
            if (dp[st] == kNegInf)
                continue;
            for (unsigned nb = 0; nb < fresh; ++nb) {
                const unsigned w = (st << inst.step) | nb;
                const unsigned ns = w & state_mask;
                const double cand = dp[st] + inst.tables[static_cast<std::size_t>(i)][w];
                if (cand > next[ns]) {
                    next[ns] = cand;
                    chosen[static_cast<std::size_t>(i)][ns] = w;
                    parents[static_cast<std::size_t>(i)][ns] = st;
                }
            }
        }
        dp.swap(next);
    }

    unsigned best_state = 0;
    for (unsigned st = 1; st < states; ++st)
        if (dp[st] > dp[best_state])
            best_state = st;

    NkOptimum result;
    result.value = dp[best_state];
    result.argmax = BitVector(inst.length);
    unsigned st = best_state;
    for (int i = count - 1; i >= 0; --i) {
        const unsigned w = chosen[static_cast<std::size_t>(i)][st];
        const int start = inst.window_start(i);
        for (int j = 0; j < arity; ++j)
            result.argmax.set(start + j, (w >> (arity - 1 - j)) & 1u);
        if (i > 0)
            st = parents[static_cast<std::size_t>(i)][st];
    }
    return result;
}

void write_nk(std::ostream& out, const NkInstance& inst) {
    out << "nk " << inst.length << ' ' << inst.neighbors << ' ' << inst.step << ' ' << inst.seed
        << '\n';
    char buf[32];
    for (const auto& table : inst.tables) {
        for (std::size_t c = 0; c < table.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", table[c]);
            if (c)
                out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

NkInstance read_nk(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&line_no](const std::string& what) {
        throw std::runtime_error("nk parse error at line " + std::to_string(line_no) + ": " + what);
    };

    if (!std::getline(in, line))
        fail("missing header");
    ++line_no;
    std::istringstream header(line);
    std::string tag;
    NkInstance inst;
    if (!(header >> tag >> inst.length >> inst.neighbors >> inst.step >> inst.seed) || tag != "nk")
        fail("expected 'nk <length> <k> <s> <seed>'");
    try {
        validate_shape(inst.length, inst.neighbors, inst.step);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }

    const int count = inst.subfunction_count();
    const std::size_t cols = std::size_t{1} << inst.arity();
    inst.tables.assign(static_cast<std::size_t>(count), {});
    for (int i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            fail("missing subfunction row");
        ++line_no;
        std::istringstream row(line);
        auto& table = inst.tables[static_cast<std::size_t>(i)];
        table.resize(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(row >> table[c]))
                fail("expected " + std::to_string(cols) + " values");
            if (table[c] < 0.0 || table[c] > 1.0)
                fail("table value outside [0,1]");
        }
        double extra;
        if (row >> extra)
            fail("too many values in row");
    }
    return inst;
}

NkProblem::NkProblem(NkInstance inst) : inst_(std::move(inst)) {
    validate_shape(inst_.length, inst_.neighbors, inst_.step);
    optimum_ = nk_exact_optimum(inst_).value;
}

std::string NkProblem::name() const {
    return "nk_l" + std::to_string(inst_.length) + "_k" + std::to_string(inst_.neighbors) + "_s" +
           std::to_string(inst_.step) + "_seed" + std::to_string(inst_.seed);
}

} // namespace dsmix
