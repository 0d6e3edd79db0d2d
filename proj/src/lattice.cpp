#include "fracsym/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fracsym {

void validate_lattice(const Lattice& lat) {
    for (const Simplex& s : lat.simplices) {
        for (int t = 0; t < lat.degree; ++t) {
            int site = s.sites[t];
            if (site < 0 || site >= lat.site_count())
                throw std::logic_error("lattice: simplex site out of range");
            if (static_cast<int>(lat.site_color[site]) != t)
                throw std::logic_error("lattice: simplex not color-ordered");
        }
        if (s.sign != 1 && s.sign != -1) throw std::logic_error("lattice: bad alternation sign");
    }
    if (!lat.closed) return;
    // Faces: drop one vertex from each simplex.
    std::map<std::vector<int>, std::vector<int>> face_signs;
    for (const Simplex& s : lat.simplices) {
        for (int drop = 0; drop < lat.degree; ++drop) {
            std::vector<int> face;
            for (int t = 0; t < lat.degree; ++t)
                if (t != drop) face.push_back(s.sites[t]);
            std::sort(face.begin(), face.end());
            face_signs[face].push_back(s.sign);
        }
    }
    // On small tori one vertex pair can stand for several geometric edges,
    // so a face set may be shared 2k times; the signs must still pair off.
    for (auto& [face, signs] : face_signs) {
        int sum = 0;
        for (int s : signs) sum += s;
        if (signs.size() < 2 || signs.size() % 2 != 0 || sum != 0)
            throw std::logic_error(
                "lattice: closed-boundary alternation violated (unbalanced face sharing)");
    }
}

Lattice build_chain(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("build_chain: n must be even and >= 4 (odd cycles are not 2-colorable)");
    Lattice lat;
    lat.degree = 2;
    lat.name = "chain-" + std::to_string(n);
    lat.site_color.resize(n);
    for (int i = 0; i < n; ++i) lat.site_color[i] = (i % 2 == 0) ? Color::A : Color::B;
    for (int i = 0; i < n; ++i) {
        int u = i, v = (i + 1) % n;
        if (lat.site_color[u] != Color::A) std::swap(u, v);
        lat.simplices.push_back(Simplex{{u, v, -1}, i % 2 == 0 ? 1 : -1});
    }
    validate_lattice(lat);
    return lat;
}

Lattice build_union_jack(int w, int h) {
    if (w < 2 || h < 2 || w % 2 != 0 || h % 2 != 0)
        throw std::invalid_argument("build_union_jack: w and h must be even and >= 2");
    Lattice lat;
    lat.degree = 3;
    lat.name = "uj-" + std::to_string(w) + "x" + std::to_string(h);
    int corners = w * h;
    lat.site_color.resize(2 * corners);
    auto corner = [&](int x, int y) { return ((y % h + h) % h) * w + ((x % w + w) % w); };
    auto center = [&](int x, int y) { return corners + corner(x, y); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            lat.site_color[corner(x, y)] = ((x + y) % 2 == 0) ? Color::A : Color::B;
            lat.site_color[center(x, y)] = Color::C;
        }
    // Four triangles per unit square, each one corner pair plus the
    // center; signs alternate around the center and across squares.
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int z = center(x, y);
            int c00 = corner(x, y), c10 = corner(x + 1, y);
            int c11 = corner(x + 1, y + 1), c01 = corner(x, y + 1);
            std::array<std::array<int, 2>, 4> sides = {{{c00, c10}, {c10, c11}, {c11, c01}, {c01, c00}}};
            int sq = ((x + y) % 2 == 0) ? 1 : -1;
            for (int t = 0; t < 4; ++t) {
                int u = sides[t][0], v = sides[t][1];
                if (lat.site_color[u] != Color::A) std::swap(u, v);
                lat.simplices.push_back(Simplex{{u, v, z}, (t % 2 == 0) ? sq : -sq});
            }
        }
    validate_lattice(lat);
    return lat;
}

}  // namespace fracsym
