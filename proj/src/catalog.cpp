#include "avar/catalog.hpp"

#include <fstream>
#include <sstream>

namespace avar {

namespace {

GroupPresentation from_text(const std::string& text) { return parse_presentation(text); }

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    out.push_back({
        "unknot",
        from_text("generators: a\n"
                  "cusp: meridian=a longitude=\n"),
        "Z (solid torus / unknot exterior); trivial longitude.",
        true,
        {"0"},
    });

    // Torus-knot presentation <x,y | x^2 = y^3>, meridian y^-1 x,
    // longitude x^2 mu^-6 (freely reduced). The meridian choice makes the
    // longitude null-homologous; the standard slope set is {0, 6} up to
    // the orientation convention.
    out.push_back({
        "trefoil",
        from_text("generators: x y\n"
                  "relator: xxYYY\n"
                  "cusp: meridian=Yx longitude=xyXyXyXyXyXy\n"),
        "Trefoil as the (2,3) torus knot.",
        true,
        {"0", "6"},
    });

    // Two-bridge presentation with w = bABa; relator a w = w b; longitude
    // w * reverse(w), which commutes with the meridian and has zero
    // exponent sums.
    out.push_back({
        "figure8",
        from_text("generators: a b\n"
                  "relator: abABaBAbaB\n"
                  "cusp: meridian=a longitude=bABaaBAb\n"),
        "Figure-eight knot, two-bridge form.",
        true,
        {"0", "4", "-4"},
    });

    // Two-bridge link presentation: relator [a, w] with w = baBABab;
    // longitudes w a^-1 and its generator swap.
    out.push_back({
        "whitehead",
        from_text("generators: a b\n"
                  "relator: abaBABabABAbabAB\n"
                  "cusp: meridian=a longitude=baBABabA\n"
                  "cusp: meridian=b longitude=abABAbaB\n"),
        "Whitehead link, two cusps, linking number zero.",
        false,
        {},
    });

    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    std::string key = name;
    if (key == "figure-eight" || key == "fig8" || key == "figure_eight") key = "figure8";
    for (const auto& e : catalog())
        if (e.name == key) return &e;
    return nullptr;
}

GroupPresentation load_presentation_arg(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) {
        std::string name = arg.substr(8);
        const CatalogEntry* e = catalog_find(name);
        if (!e) throw InputError("unknown catalog entry '" + name + "'");
        return e->presentation;
    }
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open presentation file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

} // namespace avar
