#pragma once

#include "chang/words.hpp"

#include <vector>

namespace chang {

/* One cyclic summand of a hom group, labeled by its canonical generator.
 * order == 0 stands for Z. */
struct HomSummand {
    Int order;
    Word gen;
};

struct HomGroup {
    ElementarySpace dom;
    ElementarySpace cod;
    std::vector<HomSummand> summands;

    bool is_zero() const { return summands.empty(); }
};

/* The group [X,Y] for elementary X, Y with its canonical generators, in the
 * listing order of the tables.  Total over the whole catalogue; memoized. */
const HomGroup& hom_elementary(const ElementarySpace& X, const ElementarySpace& Y);

/* Number of case guards that match for the pair; the tables are encoded so
 * that exactly one case applies.  Exposed for the completeness sweep. */
int hom_elementary_case_count(const ElementarySpace& X, const ElementarySpace& Y);

/* [X,Y] for wedges: the direct sum over blocks (i = codomain summand,
 * j = domain summand), enumerated row-major with i outer. */
struct WedgeHom {
    Space dom;
    Space cod;
    std::vector<const HomGroup*> blocks;  // blocks[i * dom.size() + j]
    std::vector<size_t> offsets;          // flat offset of each block
    size_t total_rank = 0;

    const HomGroup& block(size_t i, size_t j) const { return *blocks[i * dom.size() + j]; }
    size_t offset(size_t i, size_t j) const { return offsets[i * dom.size() + j]; }
};

WedgeHom hom_group(const Space& X, const Space& Y);

/* Multiset of summand orders, descending, with 0 = Z first. */
std::vector<Int> iso_type(const std::vector<Int>& orders);
std::vector<Int> iso_type(const HomGroup& g);
std::vector<Int> iso_type(const WedgeHom& g);

/* Product of the orders; 0 when any summand is infinite. */
Int group_order(const std::vector<Int>& orders);
Int group_order(const HomGroup& g);
Int group_order(const WedgeHom& g);

std::vector<Int> summand_orders(const WedgeHom& g);

std::string format_group(const HomGroup& g);

}  // namespace chang
