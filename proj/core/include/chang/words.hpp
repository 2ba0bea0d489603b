#pragma once

#include "chang/spaces.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chang {

using Int = boost::multiprecision::cpp_int;

/* The basic-map alphabet.  Every canonical generator in the hom tables is a
 * composite of these, and the rewrite engine works on such composites.
 * Instances carry their full (domain, codomain) elementary spaces, so the
 * same token name can stand for different maps (i_n into a Moore space vs
 * into C_r^{n+2,t}, etc.). */
enum class AtomKind : uint8_t {
    Eta,        // S^{n+k+1} -> S^{n+k}, k = 0,1
    IncSphere,  // i_n / i_{n+1}: sphere -> Moore or C-kind
    ProjSphere, // q_{n+1} / q_{n+2}: Moore or C-kind -> sphere
    IncMoore,   // i_M: M_{2^r}^n -> CBot(r) or CFull(r,t)
    ProjMoore,  // q_M: CTop(t) or CFull(r,t) -> M_{2^t}^{n+1}
    IncCeta,    // i_eta: CEta -> CBot(r)
    ProjCeta,   // q_eta: CTop(t) -> CEta
    IncCtop,    // i_Cbar: CTop(t) -> CFull(r,t)
    ProjCbot,   // q_Cund: CFull(r,t) -> CBot(r)
    EtaTilde,   // S^{n+2} -> M_2^n
    EtaBar,     // M_2^{n+1} -> S^n
    ZetaTilde,  // S^{n+2} -> CEta
    ZetaBar,    // CEta -> S^n
    XiTilde,    // M_{2^{t+1}}^{n+1} -> CTop(t)
    XiBar,      // CBot(r) -> M_{2^{r+1}}^n
    ThetaTilde, // CTop(t) -> CTop(t'), t <= t'
    ThetaBar,   // CBot(r) -> CBot(r'), r >= r'
    Bchi,       // M_{p^e}^{n+j} -> M_{p^{e'}}^{n+j}
    Lchi,       // CFull(r,t) -> CFull(r',t'), r >= r', t <= t'
};

struct Atom {
    AtomKind kind;
    ElementarySpace dom;
    ElementarySpace cod;

    bool operator==(const Atom&) const = default;
};

/* A composite of atoms, written the usual way: atoms.front() is applied last.
 * An empty atom list is the identity (dom == cod). */
struct Word {
    ElementarySpace dom;
    ElementarySpace cod;
    std::vector<Atom> atoms;

    bool operator==(const Word&) const = default;
    bool is_identity() const { return atoms.empty(); }
};

Word identity_word(const ElementarySpace& x);
/* g after f; endpoints must match. */
Word concat(const Word& g, const Word& f);

/* Atom constructors.  All check endpoint admissibility. */
Atom mk_eta(int level);  // level 0: S^{n+1}->S^n, level 1: S^{n+2}->S^{n+1}
Atom mk_inc_sphere(int level, const ElementarySpace& into);
Atom mk_proj_sphere(const ElementarySpace& from, int level);
Atom mk_inc_moore(const ElementarySpace& into);  // CBot or CFull
Atom mk_proj_moore(const ElementarySpace& from); // CTop or CFull
Atom mk_inc_ceta(const ElementarySpace& cbot);
Atom mk_proj_ceta(const ElementarySpace& ctop);
Atom mk_inc_ctop(const ElementarySpace& cfull);
Atom mk_proj_cbot(const ElementarySpace& cfull);
Atom mk_eta_tilde();
Atom mk_eta_bar();
Atom mk_zeta_tilde();
Atom mk_zeta_bar();
Atom mk_xi_tilde(int t);
Atom mk_xi_bar(int r);

/* These return std::nullopt when the map is the identity (equal parameters),
 * in which case nothing should be appended to the word. */
std::optional<Atom> mk_theta_tilde(int t, int t1);
std::optional<Atom> mk_theta_bar(int r, int r1);
std::optional<Atom> mk_b(long p, int e, int e1, int level);
std::optional<Atom> mk_l(int r, int t, int r1, int t1);

std::string to_string(const Atom& a);
std::string to_string(const Word& w);

}  // namespace chang
