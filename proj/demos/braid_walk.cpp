// Walks one weight space through the two sides of the braid relation
// T_1 T_2 T_1 = T_2 T_1 T_2 and prints the blocks, plus the inverse round
// trip for the first reflection.

#include <cstdio>

#include "qhowe/rickard.hpp"

using namespace qhowe;

static OperatorBlock path(const std::vector<int>& word, const Weight& k) {
    Weight at = k;
    OperatorBlock acc = OperatorBlock::identity(Flavor::sym, 2, k);
    for (int i : word) {
        acc = rickard_block(i, at, Flavor::sym, 2, BraidVariant::T).compose(acc);
        at = weyl_act(i, at);
    }
    return acc;
}

int main() {
    const Weight k{2, 1, 0};
    std::printf("weight %s, sym flavor, m = 2\n\n", weight_str(k).c_str());

    const OperatorBlock lhs = path({1, 2, 1}, k);
    const OperatorBlock rhs = path({2, 1, 2}, k);
    std::printf("T_1 T_2 T_1:\n  %s\n", lhs.str().c_str());
    std::printf("T_2 T_1 T_2:\n  %s\n", rhs.str().c_str());
    std::printf("braid relation holds: %s\n\n", lhs == rhs ? "yes" : "NO");

    const OperatorBlock t1 = rickard_block(1, k, Flavor::sym, 2, BraidVariant::T);
    const OperatorBlock back = invert_block(t1).compose(t1);
    std::printf("T_1:\n  %s\n", t1.str().c_str());
    std::printf("T_1^-1 T_1 = id: %s\n", back.is_identity() ? "yes" : "NO");
    std::printf("det T_1 = %s (a unit, as it must be)\n",
                t1.det().str().c_str());
    return 0;
}
