#include "simpmap/coning.hpp"

#include <algorithm>
#include <sstream>

namespace simpmap {

coning_result cone_complex(const simplicial_complex& K, vertex_id u, vertex_id v) {
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw not_in_complex("cone endpoints must be vertices of the complex");

    coning_result res{simplicial_complex(K.max_dim() + 1), {}};
    for (const auto& s : K.all_simplices()) res.khat.insert(s);

    const auto closed_star = K.closure(K.star({simplex{v}})).all_simplices();
    simplex_set cone;
    for (const auto& s : closed_star) {
        simplex c = s.with_vertex(u);
        if (!K.contains(c)) cone.insert(std::move(c));
    }
    for (const auto& c : cone) {  // (dim, lex) order keeps insertion face-first
        res.khat.insert(c);
        res.added.push_back(c);
    }
    return res;
}

simplicial_complex image_complex(const simplicial_complex& K, const vertex_map& f) {
    simplex_set images;
    K.for_each([&](const simplex& s) { images.insert(map_simplex(f, s)); });
    simplicial_complex out(K.max_dim());
    for (const auto& s : images) out.insert(s);
    return out;
}

bool is_contiguous(const simplicial_complex& K1, const simplicial_complex& K2,
                   const vertex_map& f, const vertex_map& g) {
    bool ok = true;
    K1.for_each([&](const simplex& s) {
        const simplex fs = map_simplex(f, s);
        const simplex gs = map_simplex(g, s);
        if (!K2.contains(fs) || !K2.contains(gs)) {
            std::ostringstream os;
            os << "image of " << s << " is not a simplex of the target";
            throw not_simplicial(os.str());
        }
        simplex un = fs;
        for (vertex_id v : gs) un = un.with_vertex(v);
        ok = ok && K2.contains(un);
    });
    return ok;
}

}  // namespace simpmap
