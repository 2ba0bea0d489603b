#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chang {

/* The indecomposable stable pieces: spheres S^{n+k} (k = 0,1,2), Moore spaces
 * M_{p^e}^{n+j} (j = 0,1), and the four elementary complexes built from eta
 * and 2-power degree maps.  The base dimension n stays symbolic (n >= 4). */
enum class Kind : uint8_t {
    SphereN,
    SphereN1,
    SphereN2,
    MooreN,   // M_{p^r}^n
    MooreN1,  // M_{p^t}^{n+1}
    CEta,     // C_eta^{n+2}
    CTop,     // C^{n+2,t}
    CBot,     // C_r^{n+2}
    CFull,    // C_r^{n+2,t}
};

struct SpaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ElementarySpace {
    Kind kind = Kind::SphereN;
    long p = 2;  // prime; always 2 on the C-kinds
    int r = 0;   // exponent of the n-level torsion (MooreN, CBot, CFull)
    int t = 0;   // exponent of the (n+1)-level torsion (MooreN1, CTop, CFull)

    static ElementarySpace sphere(int k);
    static ElementarySpace moore_n(long p, int r);
    static ElementarySpace moore_n1(long p, int t);
    static ElementarySpace ceta();
    static ElementarySpace ctop(int t);
    static ElementarySpace cbot(int r);
    static ElementarySpace cfull(int r, int t);

    bool operator==(const ElementarySpace&) const = default;
    bool operator<(const ElementarySpace& o) const
    {
        if (kind != o.kind)
            return kind < o.kind;
        if (p != o.p)
            return p < o.p;
        if (r != o.r)
            return r < o.r;
        return t < o.t;
    }
};

struct Space {
    std::vector<ElementarySpace> summands;  // empty = contractible point

    bool operator==(const Space&) const = default;
    size_t size() const { return summands.size(); }
};

bool is_prime(long p);

/* Throws SpaceError unless the parameters are admissible (exponents >= 1
 * where present, p prime, p = 2 on Chang kinds). */
void validate(const ElementarySpace& e);

ElementarySpace dual(const ElementarySpace& e);
Space dual(const Space& x);

std::string to_string(const ElementarySpace& e);
std::string to_string(const Space& x);

/* Wedge sum, preserving summand order. */
Space wedge(const Space& a, const Space& b);

}  // namespace chang
