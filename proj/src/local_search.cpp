#include "dsmix/local_search.hpp"

namespace dsmix {

Chromosome hill_climb(Chromosome c, Evaluator& eval, RandomSource& rng) {
    eval.ensure_evaluated(c);
    bool changed = true;
    while (changed && !eval.should_stop()) {
        changed = false;
        for (int pos : rng.permutation(c.size())) {
            if (eval.should_stop())
                break;
            const double current = c.fitness();
            c.flip(pos);
            const double f = eval.evaluate(c.bits());
            if (f > current) {
                c.set_fitness(f);
                changed = true;
            } else {
                c.flip(pos);
                c.set_fitness(current);
            }
        }
    }
    return c;
}

void local_search(Population& pop, Evaluator& eval, RandomSource& rng) {
    for (int i = 0; i < pop.size() && !eval.should_stop(); ++i)
        pop.replace(i, hill_climb(pop[i], eval, rng));
}

} // namespace dsmix
