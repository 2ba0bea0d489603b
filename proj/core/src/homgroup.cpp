#include "chang/homgroup.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace chang {

namespace {

Int pw(long p, int e)
{
    Int v = 1;
    for (int i = 0; i < e; ++i)
        v *= p;
    return v;
}

Int p2(int e)
{
    return pw(2, e);
}

/* Assemble a word from optional atoms (identity factors elided). */
Word W(const ElementarySpace& dom, const ElementarySpace& cod, std::initializer_list<std::optional<Atom>> parts)
{
    Word w{dom, cod, {}};
    for (const auto& a : parts)
        if (a)
            w.atoms.push_back(*a);
    // sanity: adjacent atoms must be composable and endpoints must match
    const ElementarySpace* expect = &cod;
    for (const auto& a : w.atoms) {
        if (!(a.cod == *expect))
            throw SpaceError(fmt::format("generator word not composable at {}", to_string(a)));
        expect = &a.dom;
    }
    if (!(*expect == dom))
        throw SpaceError("generator word domain mismatch");
    return w;
}

struct CaseSet {
    std::vector<std::pair<bool, std::function<std::vector<HomSummand>()>>> cases;

    void add(bool cond, std::function<std::vector<HomSummand>()> f)
    {
        cases.emplace_back(cond, std::move(f));
    }

    int count() const
    {
        int n = 0;
        for (auto& [c, f] : cases)
            n += c ? 1 : 0;
        return n;
    }

    std::vector<HomSummand> resolve(const ElementarySpace& X, const ElementarySpace& Y) const
    {
        if (count() != 1)
            throw SpaceError(fmt::format("hom table case analysis not exhaustive for [{}, {}] ({} matches)",
                                         to_string(X), to_string(Y), count()));
        for (auto& [c, f] : cases)
            if (c)
                return f();
        return {};
    }
};

HomSummand S(Int order, Word w)
{
    return HomSummand{std::move(order), std::move(w)};
}

int sphere_index(Kind k)
{
    return k == Kind::SphereN ? 0 : k == Kind::SphereN1 ? 1 : 2;
}

bool is_sphere(const ElementarySpace& e)
{
    return e.kind == Kind::SphereN || e.kind == Kind::SphereN1 || e.kind == Kind::SphereN2;
}

bool is_moore(const ElementarySpace& e)
{
    return e.kind == Kind::MooreN || e.kind == Kind::MooreN1;
}

bool odd_moore(const ElementarySpace& e)
{
    return is_moore(e) && e.p != 2;
}

int moore_exp(const ElementarySpace& e)
{
    return e.kind == Kind::MooreN ? e.r : e.t;
}

/* Table 3 plus its Spanier-Whitehead duals: the only nonzero groups touching
 * a mod-p^e Moore space, p odd. */
void table_odd(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    const long p = odd_moore(X) ? X.p : Y.p;

    if (odd_moore(X) && odd_moore(Y)) {
        if (X.p != Y.p) {
            cs.add(true, [] { return std::vector<HomSummand>{}; });
            return;
        }
        int a = moore_exp(X), b = moore_exp(Y);
        if (X.kind == Kind::MooreN && Y.kind == Kind::MooreN)
            cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, std::min(a, b)), W(X, Y, {mk_b(p, a, b, 0)}))}; });
        else if (X.kind == Kind::MooreN && Y.kind == Kind::MooreN1)
            cs.add(true, [=] {
                return std::vector<HomSummand>{
                    S(pw(p, std::min(a, b)), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
            });
        else if (X.kind == Kind::MooreN1 && Y.kind == Kind::MooreN1)
            cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, std::min(a, b)), W(X, Y, {mk_b(p, a, b, 1)}))}; });
        else
            cs.add(true, [] { return std::vector<HomSummand>{}; });
        return;
    }

    if (odd_moore(X)) {
        int a = moore_exp(X);
        if (X.kind == Kind::MooreN && Y.kind == Kind::SphereN1) {
            cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, a), W(X, Y, {mk_proj_sphere(X, 1)}))}; });
            return;
        }
        if (X.kind == Kind::MooreN1 && Y.kind == Kind::SphereN2) {
            cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, a), W(X, Y, {mk_proj_sphere(X, 2)}))}; });
            return;
        }
        if (X.kind == Kind::MooreN1 && Y.kind == Kind::CEta) {
            cs.add(true, [=] {
                return std::vector<HomSummand>{S(pw(p, a), W(X, Y, {mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
            });
            return;
        }
        if (X.kind == Kind::MooreN1 && Y.kind == Kind::CBot) {
            cs.add(true, [=] {
                return std::vector<HomSummand>{
                    S(pw(p, a), W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
            });
            return;
        }
        cs.add(true, [] { return std::vector<HomSummand>{}; });
        return;
    }

    // Y is the odd Moore space
    int b = moore_exp(Y);
    if (Y.kind == Kind::MooreN && X.kind == Kind::SphereN) {
        cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, b), W(X, Y, {mk_inc_sphere(0, Y)}))}; });
        return;
    }
    if (Y.kind == Kind::MooreN1 && X.kind == Kind::SphereN1) {
        cs.add(true, [=] { return std::vector<HomSummand>{S(pw(p, b), W(X, Y, {mk_inc_sphere(1, Y)}))}; });
        return;
    }
    if (Y.kind == Kind::MooreN && X.kind == Kind::CEta) {
        cs.add(true, [=] {
            return std::vector<HomSummand>{S(pw(p, b), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
        });
        return;
    }
    if (Y.kind == Kind::MooreN && X.kind == Kind::CTop) {
        cs.add(true, [=] {
            return std::vector<HomSummand>{
                S(pw(p, b), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)}))};
        });
        return;
    }
    cs.add(true, [] { return std::vector<HomSummand>{}; });
}

void table_sphere_dom(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    int a = sphere_index(X.kind);
    if (is_sphere(Y)) {
        int b = sphere_index(Y.kind);
        if (a == b)
            cs.add(true, [=] { return std::vector<HomSummand>{S(0, identity_word(X))}; });
        else if (a > b && a - b <= 2) {
            cs.add(true, [=] {
                std::vector<std::optional<Atom>> etas;
                Word w{X, Y, {}};
                for (int k = b; k < a; ++k)
                    w.atoms.insert(w.atoms.begin(), mk_eta(k));
                std::reverse(w.atoms.begin(), w.atoms.end());
                return std::vector<HomSummand>{S(2, w)};
            });
        }
        else
            cs.add(true, [] { return std::vector<HomSummand>{}; });
        return;
    }

    switch (a) {
        case 0:
            switch (Y.kind) {
                case Kind::MooreN:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(Y.r), W(X, Y, {mk_inc_sphere(0, Y)}))}; });
                    return;
                case Kind::MooreN1:
                    cs.add(true, [] { return std::vector<HomSummand>{}; });
                    return;
                case Kind::CEta:
                case Kind::CTop:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(0, W(X, Y, {mk_inc_sphere(0, Y)}))}; });
                    return;
                case Kind::CBot:
                case Kind::CFull:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(Y.r), W(X, Y, {mk_inc_sphere(0, Y)}))}; });
                    return;
                default:
                    break;
            }
            break;
        case 1:
            switch (Y.kind) {
                case Kind::MooreN:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0)}))};
                    });
                    return;
                case Kind::MooreN1:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(Y.t), W(X, Y, {mk_inc_sphere(1, Y)}))}; });
                    return;
                case Kind::CEta:
                case Kind::CBot:
                    cs.add(true, [] { return std::vector<HomSummand>{}; });
                    return;
                case Kind::CTop:
                case Kind::CFull:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(Y.t + 1), W(X, Y, {mk_inc_sphere(1, Y)}))}; });
                    return;
                default:
                    break;
            }
            break;
        case 2:
            switch (Y.kind) {
                case Kind::MooreN:
                    cs.add(Y.r == 1, [=] { return std::vector<HomSummand>{S(4, W(X, Y, {mk_eta_tilde()}))}; });
                    cs.add(Y.r > 1, [=] {
                        return std::vector<HomSummand>{
                            S(2, W(X, Y, {mk_b(2, 1, Y.r, 0), mk_eta_tilde()})),
                            S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0), mk_eta(1)}))};
                    });
                    return;
                case Kind::MooreN1:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1)}))};
                    });
                    return;
                case Kind::CEta:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(0, W(X, Y, {mk_zeta_tilde()}))}; });
                    return;
                case Kind::CTop:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1)}))};
                    });
                    return;
                case Kind::CBot:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde()})),
                            S(2, W(X, Y, {mk_inc_moore(Y), mk_b(2, 1, Y.r, 0), mk_eta_tilde()}))};
                    });
                    return;
                case Kind::CFull:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1)})),
                            S(2, W(X, Y, {mk_inc_moore(Y), mk_b(2, 1, Y.r, 0), mk_eta_tilde()}))};
                    });
                    return;
                default:
                    break;
            }
            break;
    }
    cs.add(true, [] { return std::vector<HomSummand>{}; });
}

void table_sphere_cod(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    int b = sphere_index(Y.kind);
    switch (b) {
        case 0:
            switch (X.kind) {
                case Kind::MooreN:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_eta(0), mk_proj_sphere(X, 1)}))};
                    });
                    return;
                case Kind::MooreN1:
                    cs.add(X.t == 1, [=] { return std::vector<HomSummand>{S(4, W(X, Y, {mk_eta_bar()}))}; });
                    cs.add(X.t > 1, [=] {
                        return std::vector<HomSummand>{
                            S(2, W(X, Y, {mk_eta_bar(), mk_b(2, X.t, 1, 1)})),
                            S(2, W(X, Y, {mk_eta(0), mk_eta(1), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                case Kind::CEta:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(0, W(X, Y, {mk_zeta_bar()}))}; });
                    return;
                case Kind::CTop:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_zeta_bar(), mk_proj_ceta(X)})),
                            S(2, W(X, Y, {mk_eta_bar(), mk_b(2, X.t, 1, 1), mk_proj_moore(X)}))};
                    });
                    return;
                case Kind::CBot:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_eta(0), mk_proj_sphere(X, 1)}))};
                    });
                    return;
                case Kind::CFull:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(2, W(X, Y, {mk_eta_bar(), mk_b(2, X.t, 1, 1), mk_proj_moore(X)})),
                            S(2, W(X, Y, {mk_eta(0), mk_proj_sphere(X, 1)}))};
                    });
                    return;
                default:
                    break;
            }
            break;
        case 1:
            switch (X.kind) {
                case Kind::MooreN:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(X.r), W(X, Y, {mk_proj_sphere(X, 1)}))}; });
                    return;
                case Kind::MooreN1:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(2, W(X, Y, {mk_eta(1), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                case Kind::CEta:
                case Kind::CTop:
                    cs.add(true, [] { return std::vector<HomSummand>{}; });
                    return;
                case Kind::CBot:
                case Kind::CFull:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(p2(X.r + 1), W(X, Y, {mk_proj_sphere(X, 1)}))};
                    });
                    return;
                default:
                    break;
            }
            break;
        case 2:
            switch (X.kind) {
                case Kind::MooreN:
                    cs.add(true, [] { return std::vector<HomSummand>{}; });
                    return;
                case Kind::MooreN1:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(X.t), W(X, Y, {mk_proj_sphere(X, 2)}))}; });
                    return;
                case Kind::CEta:
                case Kind::CBot:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(0, W(X, Y, {mk_proj_sphere(X, 2)}))}; });
                    return;
                case Kind::CTop:
                case Kind::CFull:
                    cs.add(true, [=] { return std::vector<HomSummand>{S(p2(X.t), W(X, Y, {mk_proj_sphere(X, 2)}))}; });
                    return;
                default:
                    break;
            }
            break;
    }
    cs.add(true, [] { return std::vector<HomSummand>{}; });
}

void table_moore_moore(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    if (X.kind == Kind::MooreN && Y.kind == Kind::MooreN) {
        int r = X.r, r1 = Y.r;
        cs.add(r == 1 && r1 == 1, [=] { return std::vector<HomSummand>{S(4, identity_word(X))}; });
        cs.add(!(r == 1 && r1 == 1), [=] {
            return std::vector<HomSummand>{
                S(p2(std::min(r, r1)), W(X, Y, {mk_b(2, r, r1, 0)})),
                S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0), mk_proj_sphere(X, 1)}))};
        });
        return;
    }
    if (X.kind == Kind::MooreN && Y.kind == Kind::MooreN1) {
        int m = std::min(X.r, Y.t);
        cs.add(true, [=] {
            return std::vector<HomSummand>{S(p2(m), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
        });
        return;
    }
    if (X.kind == Kind::MooreN1 && Y.kind == Kind::MooreN) {
        int t = X.t, r1 = Y.r;
        cs.add(t == 1 && r1 == 1, [=] {
            return std::vector<HomSummand>{
                S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar()})),
                S(2, W(X, Y, {mk_eta_tilde(), mk_proj_sphere(X, 2)}))};
        });
        cs.add(t > 1 && r1 == 1, [=] {
            return std::vector<HomSummand>{
                S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar(), mk_b(2, t, 1, 1)})),
                S(4, W(X, Y, {mk_eta_tilde(), mk_proj_sphere(X, 2)}))};
        });
        cs.add(t == 1 && r1 > 1, [=] {
            return std::vector<HomSummand>{
                S(4, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar()})),
                S(2, W(X, Y, {mk_b(2, 1, r1, 0), mk_eta_tilde(), mk_proj_sphere(X, 2)}))};
        });
        cs.add(t > 1 && r1 > 1, [=] {
            return std::vector<HomSummand>{
                S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar(), mk_b(2, t, 1, 1)})),
                S(2, W(X, Y, {mk_b(2, 1, r1, 0), mk_eta_tilde(), mk_proj_sphere(X, 2)})),
                S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0), mk_eta(1), mk_proj_sphere(X, 2)}))};
        });
        return;
    }
    // MooreN1 -> MooreN1
    int t = X.t, t1 = Y.t;
    cs.add(t == 1 && t1 == 1, [=] { return std::vector<HomSummand>{S(4, identity_word(X))}; });
    cs.add(!(t == 1 && t1 == 1), [=] {
        return std::vector<HomSummand>{
            S(p2(std::min(t, t1)), W(X, Y, {mk_b(2, t, t1, 1)})),
            S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1), mk_proj_sphere(X, 2)}))};
    });
}

void table_moore_to_chang(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    if (X.kind == Kind::MooreN) {
        int r = X.r;
        switch (Y.kind) {
            case Kind::CEta:
                cs.add(true, [] { return std::vector<HomSummand>{}; });
                return;
            case Kind::CTop: {
                int m2 = std::min(r, Y.t + 1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(m2), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
                });
                return;
            }
            case Kind::CBot: {
                int l = std::min(r, Y.r);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(l), W(X, Y, {mk_inc_moore(Y), mk_b(2, r, Y.r, 0)}))};
                });
                return;
            }
            case Kind::CFull: {
                int l = std::min(r, Y.r), m2 = std::min(r, Y.t + 1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(l), W(X, Y, {mk_inc_moore(Y), mk_b(2, r, Y.r, 0)})),
                        S(p2(m2), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
                });
                return;
            }
            default:
                break;
        }
    }
    else {
        int t = X.t;
        switch (Y.kind) {
            case Kind::CEta:
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(t), W(X, Y, {mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                });
                return;
            case Kind::CTop: {
                int n2 = std::min(t, Y.t + 1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(n2), W(X, Y, {mk_xi_tilde(Y.t), mk_b(2, t, Y.t + 1, 1)})),
                        S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1), mk_proj_sphere(X, 2)}))};
                });
                return;
            }
            case Kind::CBot:
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(t), W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)})),
                        S(2, W(X, Y, {mk_inc_moore(Y), mk_b(2, 1, Y.r, 0), mk_eta_tilde(), mk_proj_sphere(X, 2)}))};
                });
                return;
            case Kind::CFull: {
                int n2 = std::min(t, Y.t + 1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(n2), W(X, Y, {mk_inc_ctop(Y), mk_xi_tilde(Y.t), mk_b(2, t, Y.t + 1, 1)})),
                        S(2, W(X, Y, {mk_inc_moore(Y), mk_b(2, 1, Y.r, 0), mk_eta_tilde(), mk_proj_sphere(X, 2)})),
                        S(2, W(X, Y, {mk_inc_sphere(1, Y), mk_eta(1), mk_proj_sphere(X, 2)}))};
                });
                return;
            }
            default:
                break;
        }
    }
    throw SpaceError("table_moore_to_chang: bad kinds");
}

void table_chang_to_moore(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    if (Y.kind == Kind::MooreN) {
        int r1 = Y.r;
        switch (X.kind) {
            case Kind::CEta:
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(r1), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
                });
                return;
            case Kind::CTop:
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(r1), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)})),
                        S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar(), mk_b(2, X.t, 1, 1), mk_proj_moore(X)}))};
                });
                return;
            case Kind::CBot: {
                int l1 = std::min(X.r + 1, r1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(l1), W(X, Y, {mk_b(2, X.r + 1, r1, 0), mk_xi_bar(X.r)})),
                        S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0), mk_proj_sphere(X, 1)}))};
                });
                return;
            }
            case Kind::CFull: {
                int l1 = std::min(X.r + 1, r1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(l1), W(X, Y, {mk_b(2, X.r + 1, r1, 0), mk_xi_bar(X.r), mk_proj_cbot(X)})),
                        S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta_bar(), mk_b(2, X.t, 1, 1), mk_proj_moore(X)})),
                        S(2, W(X, Y, {mk_inc_sphere(0, Y), mk_eta(0), mk_proj_sphere(X, 1)}))};
                });
                return;
            }
            default:
                break;
        }
    }
    else {
        int t1 = Y.t;
        switch (X.kind) {
            case Kind::CEta:
                cs.add(true, [] { return std::vector<HomSummand>{}; });
                return;
            case Kind::CTop: {
                int nn = std::min(X.t, t1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(nn), W(X, Y, {mk_b(2, X.t, t1, 1), mk_proj_moore(X)}))};
                });
                return;
            }
            case Kind::CBot: {
                int m1 = std::min(X.r + 1, t1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{S(p2(m1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
                });
                return;
            }
            case Kind::CFull: {
                int m1 = std::min(X.r + 1, t1), nn = std::min(X.t, t1);
                cs.add(true, [=] {
                    return std::vector<HomSummand>{
                        S(p2(m1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)})),
                        S(p2(nn), W(X, Y, {mk_b(2, X.t, t1, 1), mk_proj_moore(X)}))};
                });
                return;
            }
            default:
                break;
        }
    }
    throw SpaceError("table_chang_to_moore: bad kinds");
}

void table_chang_chang(CaseSet& cs, const ElementarySpace& X, const ElementarySpace& Y)
{
    switch (X.kind) {
        case Kind::CEta:
            switch (Y.kind) {
                case Kind::CEta:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(0, identity_word(X)),
                            S(0, W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
                    });
                    return;
                case Kind::CTop:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(0, W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
                    });
                    return;
                case Kind::CBot:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_inc_ceta(Y)})),
                            S(p2(Y.r), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
                    });
                    return;
                case Kind::CFull:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(p2(Y.r), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar()}))};
                    });
                    return;
                default:
                    break;
            }
            break;
        case Kind::CTop: {
            int t = X.t;
            switch (Y.kind) {
                case Kind::CEta:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_proj_ceta(X)})),
                            S(p2(t), W(X, Y, {mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                case Kind::CTop: {
                    int t1 = Y.t;
                    cs.add(t > t1, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)})),
                            S(p2(t1 + 1), W(X, Y, {mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)}))};
                    });
                    cs.add(t <= t1, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_theta_tilde(t, t1)})),
                            S(p2(t), W(X, Y, {mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)}))};
                    });
                    return;
                }
                case Kind::CBot: {
                    int r1 = Y.r;
                    cs.add(t >= r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(t + 1), W(X, Y, {mk_inc_ceta(Y), mk_proj_ceta(X)})),
                            S(p2(r1), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)}))};
                    });
                    cs.add(t < r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(r1 + 1), W(X, Y, {mk_inc_ceta(Y), mk_proj_ceta(X)})),
                            S(p2(t), W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                }
                case Kind::CFull: {
                    int r1 = Y.r, t1 = Y.t;
                    cs.add(t <= t1 && t < r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(r1 + 1), W(X, Y, {mk_inc_ctop(Y), mk_theta_tilde(t, t1)})),
                            S(p2(t), W(X, Y, {mk_inc_ctop(Y), mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)}))};
                    });
                    cs.add(t <= t1 && t >= r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(t + 1), W(X, Y, {mk_inc_ctop(Y), mk_theta_tilde(t, t1)})),
                            S(p2(r1), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)}))};
                    });
                    cs.add(t > t1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(t1 + 1), W(X, Y, {mk_inc_ctop(Y), mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)})),
                            S(p2(r1), W(X, Y, {mk_inc_sphere(0, Y), mk_zeta_bar(), mk_proj_ceta(X)}))};
                    });
                    return;
                }
                default:
                    break;
            }
            break;
        }
        case Kind::CBot: {
            int r = X.r;
            switch (Y.kind) {
                case Kind::CEta:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(0, W(X, Y, {mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                case Kind::CTop: {
                    int m = std::min(r, Y.t);
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
                    });
                    return;
                }
                case Kind::CBot: {
                    int r1 = Y.r;
                    cs.add(r1 > r, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)})),
                            S(p2(r + 1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r)}))};
                    });
                    cs.add(r1 <= r, [=] {
                        return std::vector<HomSummand>{
                            S(0, W(X, Y, {mk_theta_bar(r, r1)})),
                            S(p2(r1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r)}))};
                    });
                    return;
                }
                case Kind::CFull: {
                    int m = std::min(r, Y.t), l1 = std::min(r + 1, Y.r);
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)})),
                            S(p2(l1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, Y.r, 0), mk_xi_bar(r)}))};
                    });
                    return;
                }
                default:
                    break;
            }
            break;
        }
        case Kind::CFull: {
            int r = X.r, t = X.t;
            switch (Y.kind) {
                case Kind::CEta:
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{S(p2(t), W(X, Y, {mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                case Kind::CTop: {
                    int n2 = std::min(t, Y.t + 1), m = std::min(r, Y.t);
                    cs.add(true, [=] {
                        return std::vector<HomSummand>{
                            S(p2(n2), W(X, Y, {mk_xi_tilde(Y.t), mk_b(2, t, Y.t + 1, 1), mk_proj_moore(X)})),
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)}))};
                    });
                    return;
                }
                case Kind::CBot: {
                    int r1 = Y.r;
                    cs.add(r >= r1 && r1 <= t, [=] {
                        return std::vector<HomSummand>{
                            S(p2(t + 1), W(X, Y, {mk_theta_bar(r, r1), mk_proj_cbot(X)})),
                            S(p2(r1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r), mk_proj_cbot(X)}))};
                    });
                    cs.add(r >= r1 && r1 > t, [=] {
                        return std::vector<HomSummand>{
                            S(p2(r1 + 1), W(X, Y, {mk_theta_bar(r, r1), mk_proj_cbot(X)})),
                            S(p2(t), W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    cs.add(r < r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(r + 1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r), mk_proj_cbot(X)})),
                            S(p2(t), W(X, Y, {mk_inc_ceta(Y), mk_zeta_tilde(), mk_proj_sphere(X, 2)}))};
                    });
                    return;
                }
                case Kind::CFull: {
                    int r1 = Y.r, t1 = Y.t;
                    int m = std::min(r, t1), l1 = std::min(r + 1, r1), n2 = std::min(t, t1 + 1);
                    cs.add(r1 > r || t1 < t, [=] {
                        return std::vector<HomSummand>{
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)})),
                            S(p2(l1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r), mk_proj_cbot(X)})),
                            S(p2(n2), W(X, Y, {mk_inc_ctop(Y), mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)}))};
                    });
                    cs.add(r1 <= r && t1 >= t && t < r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)})),
                            S(p2(r1 + 1), W(X, Y, {mk_l(r, t, r1, t1)})),
                            S(p2(t), W(X, Y, {mk_inc_ctop(Y), mk_xi_tilde(t1), mk_b(2, t, t1 + 1, 1), mk_proj_moore(X)}))};
                    });
                    cs.add(r1 <= r && t1 >= t && t >= r1, [=] {
                        return std::vector<HomSummand>{
                            S(p2(m + 1), W(X, Y, {mk_inc_sphere(1, Y), mk_proj_sphere(X, 1)})),
                            S(p2(t + 1), W(X, Y, {mk_l(r, t, r1, t1)})),
                            S(p2(r1), W(X, Y, {mk_inc_moore(Y), mk_b(2, r + 1, r1, 0), mk_xi_bar(r), mk_proj_cbot(X)}))};
                    });
                    return;
                }
                default:
                    break;
            }
            break;
        }
        default:
            break;
    }
    throw SpaceError("table_chang_chang: bad kinds");
}

CaseSet build_cases(const ElementarySpace& X, const ElementarySpace& Y)
{
    validate(X);
    validate(Y);
    CaseSet cs;
    if (odd_moore(X) || odd_moore(Y))
        table_odd(cs, X, Y);
    else if (is_sphere(X))
        table_sphere_dom(cs, X, Y);
    else if (is_sphere(Y))
        table_sphere_cod(cs, X, Y);
    else if (is_moore(X) && is_moore(Y))
        table_moore_moore(cs, X, Y);
    else if (is_moore(X))
        table_moore_to_chang(cs, X, Y);
    else if (is_moore(Y))
        table_chang_to_moore(cs, X, Y);
    else
        table_chang_chang(cs, X, Y);
    return cs;
}

}  // namespace

const HomGroup& hom_elementary(const ElementarySpace& X, const ElementarySpace& Y)
{
    static std::map<std::pair<ElementarySpace, ElementarySpace>, HomGroup> memo;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto key = std::make_pair(X, Y);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    HomGroup g{X, Y, build_cases(X, Y).resolve(X, Y)};
    return memo.emplace(std::move(key), std::move(g)).first->second;
}

int hom_elementary_case_count(const ElementarySpace& X, const ElementarySpace& Y)
{
    return build_cases(X, Y).count();
}

WedgeHom hom_group(const Space& X, const Space& Y)
{
    WedgeHom w;
    w.dom = X;
    w.cod = Y;
    size_t off = 0;
    for (const auto& yi : Y.summands)
        for (const auto& xj : X.summands) {
            const HomGroup& g = hom_elementary(xj, yi);
            w.blocks.push_back(&g);
            w.offsets.push_back(off);
            off += g.summands.size();
        }
    w.total_rank = off;
    return w;
}

std::vector<Int> iso_type(const std::vector<Int>& orders)
{
    std::vector<Int> t = orders;
    std::sort(t.begin(), t.end(), [](const Int& a, const Int& b) {
        if ((a == 0) != (b == 0))
            return a == 0;  // infinite summands first
        return a > b;
    });
    return t;
}

std::vector<Int> iso_type(const HomGroup& g)
{
    std::vector<Int> o;
    for (const auto& s : g.summands)
        o.push_back(s.order);
    return iso_type(o);
}

std::vector<Int> summand_orders(const WedgeHom& g)
{
    std::vector<Int> o;
    for (const auto* b : g.blocks)
        for (const auto& s : b->summands)
            o.push_back(s.order);
    return o;
}

std::vector<Int> iso_type(const WedgeHom& g)
{
    return iso_type(summand_orders(g));
}

Int group_order(const std::vector<Int>& orders)
{
    Int n = 1;
    for (const auto& o : orders) {
        if (o == 0)
            return 0;
        n *= o;
    }
    return n;
}

Int group_order(const HomGroup& g)
{
    std::vector<Int> o;
    for (const auto& s : g.summands)
        o.push_back(s.order);
    return group_order(o);
}

Int group_order(const WedgeHom& g)
{
    return group_order(summand_orders(g));
}

std::string format_group(const HomGroup& g)
{
    if (g.summands.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < g.summands.size(); ++i) {
        if (i)
            s += " + ";
        const auto& sm = g.summands[i];
        if (sm.order == 0)
            s += fmt::format("Z <{}>", to_string(sm.gen));
        else
            s += fmt::format("Z/{} <{}>", sm.order.str(), to_string(sm.gen));
    }
    return s;
}

}  // namespace chang
