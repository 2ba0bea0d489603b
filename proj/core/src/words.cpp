#include "chang/words.hpp"

#include <fmt/format.h>

namespace chang {

namespace {

[[noreturn]] void bad(const std::string& msg)
{
    throw SpaceError("word construction: " + msg);
}

int sphere_level(const ElementarySpace& s)
{
    switch (s.kind) {
        case Kind::SphereN:
            return 0;
        case Kind::SphereN1:
            return 1;
        case Kind::SphereN2:
            return 2;
        default:
            bad("not a sphere");
    }
}

}  // namespace

Word identity_word(const ElementarySpace& x)
{
    return Word{x, x, {}};
}

Word concat(const Word& g, const Word& f)
{
    if (!(g.dom == f.cod))
        bad("concat endpoint mismatch");
    Word w{f.dom, g.cod, g.atoms};
    w.atoms.insert(w.atoms.end(), f.atoms.begin(), f.atoms.end());
    return w;
}

Atom mk_eta(int level)
{
    if (level != 0 && level != 1)
        bad("eta level out of range");
    return Atom{AtomKind::Eta, ElementarySpace::sphere(level + 1), ElementarySpace::sphere(level)};
}

Atom mk_inc_sphere(int level, const ElementarySpace& into)
{
    bool ok = false;
    switch (into.kind) {
        case Kind::MooreN:
        case Kind::CEta:
        case Kind::CBot:
            ok = level == 0;
            break;
        case Kind::MooreN1:
            ok = level == 1;
            break;
        case Kind::CTop:
        case Kind::CFull:
            ok = level == 0 || level == 1;
            break;
        default:
            break;
    }
    if (!ok)
        bad(fmt::format("no canonical sphere inclusion S{} -> {}", level, to_string(into)));
    return Atom{AtomKind::IncSphere, ElementarySpace::sphere(level), into};
}

Atom mk_proj_sphere(const ElementarySpace& from, int level)
{
    bool ok = false;
    switch (from.kind) {
        case Kind::MooreN:
            ok = level == 1;
            break;
        case Kind::MooreN1:
        case Kind::CEta:
        case Kind::CTop:
            ok = level == 2;
            break;
        case Kind::CBot:
        case Kind::CFull:
            ok = level == 1 || level == 2;
            break;
        default:
            break;
    }
    if (!ok)
        bad(fmt::format("no canonical projection {} -> S{}", to_string(from), level));
    return Atom{AtomKind::ProjSphere, from, ElementarySpace::sphere(level)};
}

Atom mk_inc_moore(const ElementarySpace& into)
{
    if (into.kind != Kind::CBot && into.kind != Kind::CFull)
        bad("i_M lands in CBot or CFull");
    return Atom{AtomKind::IncMoore, ElementarySpace::moore_n(2, into.r), into};
}

Atom mk_proj_moore(const ElementarySpace& from)
{
    if (from.kind != Kind::CTop && from.kind != Kind::CFull)
        bad("q_M starts from CTop or CFull");
    return Atom{AtomKind::ProjMoore, from, ElementarySpace::moore_n1(2, from.t)};
}

Atom mk_inc_ceta(const ElementarySpace& cbot)
{
    if (cbot.kind != Kind::CBot)
        bad("i_eta lands in CBot");
    return Atom{AtomKind::IncCeta, ElementarySpace::ceta(), cbot};
}

Atom mk_proj_ceta(const ElementarySpace& ctop)
{
    if (ctop.kind != Kind::CTop)
        bad("q_eta starts from CTop");
    return Atom{AtomKind::ProjCeta, ctop, ElementarySpace::ceta()};
}

Atom mk_inc_ctop(const ElementarySpace& cfull)
{
    if (cfull.kind != Kind::CFull)
        bad("i_Cbar lands in CFull");
    return Atom{AtomKind::IncCtop, ElementarySpace::ctop(cfull.t), cfull};
}

Atom mk_proj_cbot(const ElementarySpace& cfull)
{
    if (cfull.kind != Kind::CFull)
        bad("q_Cund starts from CFull");
    return Atom{AtomKind::ProjCbot, cfull, ElementarySpace::cbot(cfull.r)};
}

Atom mk_eta_tilde()
{
    return Atom{AtomKind::EtaTilde, ElementarySpace::sphere(2), ElementarySpace::moore_n(2, 1)};
}

Atom mk_eta_bar()
{
    return Atom{AtomKind::EtaBar, ElementarySpace::moore_n1(2, 1), ElementarySpace::sphere(0)};
}

Atom mk_zeta_tilde()
{
    return Atom{AtomKind::ZetaTilde, ElementarySpace::sphere(2), ElementarySpace::ceta()};
}

Atom mk_zeta_bar()
{
    return Atom{AtomKind::ZetaBar, ElementarySpace::ceta(), ElementarySpace::sphere(0)};
}

Atom mk_xi_tilde(int t)
{
    return Atom{AtomKind::XiTilde, ElementarySpace::moore_n1(2, t + 1), ElementarySpace::ctop(t)};
}

Atom mk_xi_bar(int r)
{
    return Atom{AtomKind::XiBar, ElementarySpace::cbot(r), ElementarySpace::moore_n(2, r + 1)};
}

std::optional<Atom> mk_theta_tilde(int t, int t1)
{
    if (t > t1)
        bad("theta~ needs t <= t'");
    if (t == t1)
        return std::nullopt;
    return Atom{AtomKind::ThetaTilde, ElementarySpace::ctop(t), ElementarySpace::ctop(t1)};
}

std::optional<Atom> mk_theta_bar(int r, int r1)
{
    if (r < r1)
        bad("theta- needs r >= r'");
    if (r == r1)
        return std::nullopt;
    return Atom{AtomKind::ThetaBar, ElementarySpace::cbot(r), ElementarySpace::cbot(r1)};
}

std::optional<Atom> mk_b(long p, int e, int e1, int level)
{
    if (e == e1)
        return std::nullopt;
    auto mk = [&](int ee) {
        return level == 0 ? ElementarySpace::moore_n(p, ee) : ElementarySpace::moore_n1(p, ee);
    };
    return Atom{AtomKind::Bchi, mk(e), mk(e1)};
}

std::optional<Atom> mk_l(int r, int t, int r1, int t1)
{
    if (r < r1 || t > t1)
        bad("L(chi) needs r >= r' and t <= t'");
    if (r == r1 && t == t1)
        return std::nullopt;
    return Atom{AtomKind::Lchi, ElementarySpace::cfull(r, t), ElementarySpace::cfull(r1, t1)};
}

std::string to_string(const Atom& a)
{
    switch (a.kind) {
        case AtomKind::Eta:
            return "eta";
        case AtomKind::IncSphere:
            return sphere_level(a.dom) == 0 ? "i_n" : "i_{n+1}";
        case AtomKind::ProjSphere:
            return sphere_level(a.cod) == 1 ? "q_{n+1}" : "q_{n+2}";
        case AtomKind::IncMoore:
            return "i_M";
        case AtomKind::ProjMoore:
            return "q_M";
        case AtomKind::IncCeta:
            return "i_eta";
        case AtomKind::ProjCeta:
            return "q_eta";
        case AtomKind::IncCtop:
            return "i_Cbar";
        case AtomKind::ProjCbot:
            return "q_Cund";
        case AtomKind::EtaTilde:
            return "eta~";
        case AtomKind::EtaBar:
            return "eta-";
        case AtomKind::ZetaTilde:
            return "zeta~";
        case AtomKind::ZetaBar:
            return "zeta-";
        case AtomKind::XiTilde:
            return "xi~";
        case AtomKind::XiBar:
            return "xi-";
        case AtomKind::ThetaTilde:
            return "theta~";
        case AtomKind::ThetaBar:
            return "theta-";
        case AtomKind::Bchi:
            return "B(chi)";
        case AtomKind::Lchi:
            return "L(chi)";
    }
    return "?";
}

std::string to_string(const Word& w)
{
    if (w.atoms.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.atoms.size(); ++i) {
        // render eta.eta as eta^2
        if (w.atoms[i].kind == AtomKind::Eta && i + 1 < w.atoms.size() && w.atoms[i + 1].kind == AtomKind::Eta) {
            if (!s.empty())
                s += ' ';
            s += "eta^2";
            ++i;
            continue;
        }
        if (!s.empty())
            s += ' ';
        s += to_string(w.atoms[i]);
    }
    return s;
}

}  // namespace chang
