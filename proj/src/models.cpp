#include "floercone/models.hpp"

#include "floercone/error.hpp"

namespace floercone {

FilteredComplex staircase()
{
    FilteredComplex c;
    c.add_generator({"x", 1, 8});
    c.add_generator({"y", 0, 4});
    c.add_generator({"z", -1, 0});
    c.toggle_entry("x", "y", 0);
    c.toggle_entry("z", "y", 1);
    return c;
}

FilteredComplex box(std::string const& suffix)
{
    FilteredComplex c;
    c.add_generator({"a" + suffix, 0, 4});
    c.add_generator({"b" + suffix, 1, 8});
    c.add_generator({"c" + suffix, -1, 0});
    c.add_generator({"d" + suffix, 0, 4});
    c.toggle_entry("a" + suffix, "b" + suffix, 1);
    c.toggle_entry("a" + suffix, "c" + suffix, 0);
    c.toggle_entry("b" + suffix, "d" + suffix, 0);
    c.toggle_entry("c" + suffix, "d" + suffix, 1);
    return c;
}

FilteredComplex unknot()
{
    FilteredComplex c;
    c.add_generator({"u", 0, 0});
    return c;
}

FilteredComplex build_minus_En(int n)
{
    if (n < 1 || n % 2 == 0)
        throw Error(ErrorKind::BadParameter, "n must be odd and positive, got " + std::to_string(n));
    FilteredComplex c = staircase();
    for (int i = 1; i <= (n - 1) / 2; ++i)
        c = direct_sum(c, box("_" + std::to_string(i)));
    return c;
}

FilteredComplex mirror(FilteredComplex const& c)
{
    FilteredComplex m;
    for (auto const& g : c.generators())
        m.add_generator({g.name, -g.alexander, -g.maslov_x4});
    for (auto const& e : c.entries())
        m.toggle_entry(e.to, e.from, e.u_power);
    return m;
}

namespace {

std::map<std::string, std::string> const reflection = {
    {"x", "z"},   {"z", "x"},   {"y", "y"},   {"a", "a"},   {"b", "c"}, {"c", "b"}, {"d", "d"},
    {"u", "u"},   {"O", "O"},   {"xh", "xv"}, {"xv", "xh"}, {"yh", "yv"}, {"yv", "yh"},
};

} // namespace

FlipMap flip(FilteredComplex const& c)
{
    FlipMap f;
    for (auto const& g : c.generators())
    {
        auto const cut = g.name.find('_');
        std::string const base = g.name.substr(0, cut);
        std::string const suffix = cut == std::string::npos ? "" : g.name.substr(cut);
        auto const rule = reflection.find(base);
        if (rule == reflection.end())
            throw Error(ErrorKind::UnsupportedModel, "no reflection declared for '" + g.name + "'");
        auto const image = c.find(rule->second + suffix);
        if (!image)
            throw Error(ErrorKind::UnsupportedModel, "reflection partner of '" + g.name + "' missing");
        f.partner.push_back(*image);
    }
    for (std::size_t g = 0; g < c.size(); ++g)
    {
        auto const& a = c.generator(g);
        auto const& b = c.generator(f(g));
        if (f(f(g)) != g || b.alexander != -a.alexander || b.maslov_x4 != a.maslov_x4 - 8 * a.alexander)
            throw Error(ErrorKind::UnsupportedModel, "reflection of '" + a.name + "' breaks the gradings");
    }
    for (auto const& e : c.entries())
    {
        int const k = e.u_power + c.generator(e.from).alexander - c.generator(e.to).alexander;
        auto const& image = c.boundary(f(e.from));
        auto const it = image.find(f(e.to));
        if (it == image.end() || it->second != k)
            throw Error(ErrorKind::UnsupportedModel, "reflection is not a chain map at '" +
                                                         c.generator(e.from).name + "'");
    }
    return f;
}

std::map<int, long long> alexander_polynomial(FilteredComplex const& c)
{
    auto const ranks = homology(c, Flavor::hat_knot, {GradingKey::maslov_x4, GradingKey::alexander});
    std::map<int, long long> poly;
    for (auto const& [key, r] : ranks.ranks)
    {
        if (key[0] % 4 != 0)
            throw Error(ErrorKind::BadParameter, "Euler characteristic needs integral Maslov gradings");
        long long const sign = (key[0] / 4) % 2 == 0 ? 1 : -1;
        poly[key[1]] += sign * r;
    }
    std::erase_if(poly, [](auto const& term) { return term.second == 0; });
    return poly;
}

} // namespace floercone
