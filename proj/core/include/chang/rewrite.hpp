#pragma once

#include "chang/homgroup.hpp"

#include <vector>

namespace chang {

/* Raised when a composite cannot be expanded in the canonical basis.  This
 * signals a gap in the frozen composition rules (a build defect), never a
 * user error. */
struct TableIncomplete : std::runtime_error {
    explicit TableIncomplete(const std::string& what) : std::runtime_error(what) {}
};

/* Expand an arbitrary composable word in the canonical basis of
 * [w.dom, w.cod]; the result is a coefficient vector over
 * hom_elementary(w.dom, w.cod).summands, reduced modulo summand orders. */
std::vector<Int> expand_word(const Word& w);

/* Frozen composition-table entry: the expansion of gen_g . gen_f where
 * gen_g is summand gi of [Y,Z] and gen_f is summand fi of [X,Y].  Memoized;
 * every entry is computed once from the relation rules and reused. */
const std::vector<Int>& compose_generators(const ElementarySpace& X, const ElementarySpace& Y,
                                           const ElementarySpace& Z, size_t gi, size_t fi);

/* Dual of an atom / word under Spanier-Whitehead duality. */
Atom dual_atom(const Atom& a);
Word dual_word(const Word& w);

}  // namespace chang
