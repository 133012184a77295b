#include "fsq/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fsq::io {

namespace {

// wraps nlohmann's exceptions so every malformed input surfaces uniformly
[[noreturn]] void input_error(const std::string& what) {
    throw std::invalid_argument("invalid input: " + what);
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        input_error(e.what());
    }
}

}  // namespace

json scalar_to_json(const Scalar& s) { return scalar_to_string(s); }

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) input_error("scalar must be a \"p/q\" string or an integer");
    try {
        return scalar_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        input_error(e.what());
    }
}

json matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(scalar_to_json(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const json& j) {
    return guarded([&] {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        const json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            input_error("matrix entry count must equal rows*cols");
        std::vector<Scalar> vals;
        vals.reserve(entries.size());
        for (const auto& e : entries) vals.push_back(scalar_from_json(e));
        return RationalMatrix(rows, cols, std::move(vals));
    });
}

json class_to_json(const NumericalClass& v) {
    return json{{"surface", to_string(v.surface)},
                {"class", json{{"rank", v.rank}, {"c1", v.c1.coords}, {"chi", v.chi}}}};
}

NumericalClass class_from_json(const json& j) {
    return guarded([&] {
        SurfaceTag surface = surface_from_string(j.at("surface").get<std::string>());
        const json& cls = j.at("class");
        return NumericalClass{surface, cls.at("rank").get<long>(),
                              divisor(surface, cls.at("c1").get<std::vector<long>>()),
                              cls.at("chi").get<long>()};
    });
}

json quiver_to_json(const Quiver& q, const RelationSet& rels) {
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back(json{{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
    json relations = json::array();
    for (const auto& rel : rels.relations) {
        json terms = json::array();
        for (const auto& term : rel)
            terms.push_back(json{{"coeff", scalar_to_json(term.coeff)}, {"path", term.path}});
        relations.push_back(std::move(terms));
    }
    return json{{"vertices", q.vertex_count}, {"arrows", std::move(arrows)},
                {"relations", std::move(relations)}};
}

std::pair<Quiver, RelationSet> quiver_from_json(const json& j) {
    return guarded([&] {
        Quiver q;
        q.vertex_count = j.at("vertices").get<int>();
        for (const auto& a : j.at("arrows")) {
            Arrow arrow{a.at("id").get<int>(), a.at("src").get<int>(), a.at("dst").get<int>()};
            if (arrow.src < 0 || arrow.src >= q.vertex_count || arrow.dst < 0 ||
                arrow.dst >= q.vertex_count)
                input_error("arrow endpoint out of range");
            q.arrows.push_back(arrow);
            q.arrow_names.push_back("a" + std::to_string(arrow.id));
        }
        RelationSet rels;
        for (const auto& rel : j.value("relations", json::array())) {
            Relation relation;
            for (const auto& term : rel)
                relation.push_back(PathTerm{scalar_from_json(term.at("coeff")),
                                            term.at("path").get<std::vector<int>>()});
            rels.relations.push_back(std::move(relation));
        }
        return std::make_pair(std::move(q), std::move(rels));
    });
}

json rep_to_json(const Representation& rep) {
    json mats = json::object();
    for (std::size_t a = 0; a < rep.mats.size(); ++a)
        mats[std::to_string(a)] = matrix_to_json(rep.mats[a]);
    return json{{"dims", rep.dims}, {"mats", std::move(mats)}};
}

Representation rep_from_json(const json& j) {
    return guarded([&] {
        Representation rep;
        rep.dims = j.at("dims").get<DimVector>();
        const json& mats = j.at("mats");
        rep.mats.resize(mats.size());
        for (const auto& [key, value] : mats.items()) {
            std::size_t id = std::stoul(key);
            if (id >= rep.mats.size()) input_error("arrow id " + key + " out of range");
            rep.mats[id] = matrix_from_json(value);
        }
        return rep;
    });
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(json{{"coeff", scalar_to_json(coeff)}, {"exponents", exps}});
    return terms;
}

Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
    return guarded([&] {
        Polynomial p(nvars);
        for (const auto& term : j) {
            Exponents exps = term.at("exponents").get<Exponents>();
            if (exps.size() != nvars) input_error("exponent vector has wrong length");
            for (int e : exps)
                if (e < 0) input_error("negative exponent");
            p.add_term(exps, scalar_from_json(term.at("coeff")));
        }
        return p;
    });
}

namespace {

Twist twist_from_json(const json& j, std::size_t ngroups) {
    Twist t;
    if (j.is_number_integer()) {
        t.push_back(j.get<int>());
    } else {
        t = j.get<Twist>();
    }
    if (t.size() != ngroups) input_error("twist length must match the Picard rank");
    return t;
}

}  // namespace

json complex_to_json(const LineBundleComplex& c) {
    json terms = json::array();
    for (const auto& position : c.terms) {
        json row = json::array();
        for (const auto& twist : position) row.push_back(twist);
        terms.push_back(std::move(row));
    }
    json maps = json::array();
    for (const auto& m : c.maps) {
        json entries = json::array();
        for (const auto& p : m.entries) entries.push_back(polynomial_to_json(p));
        maps.push_back(json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}});
    }
    return json{{"space", to_string(c.space)},
                {"positions", json::array({c.min_position, c.max_position()})},
                {"terms", std::move(terms)},
                {"maps", std::move(maps)}};
}

LineBundleComplex complex_from_json(const json& j) {
    return guarded([&] {
        Space space = space_from_string(j.at("space").get<std::string>());
        const SpaceInfo& info = space_info(space);
        const json& positions = j.at("positions");
        if (!positions.is_array() || positions.size() != 2)
            input_error("positions must be [first, last]");
        int p0 = positions[0].get<int>();
        int p1 = positions[1].get<int>();
        std::vector<std::vector<Twist>> terms;
        for (const auto& position : j.at("terms")) {
            std::vector<Twist> row;
            for (const auto& twist : position) row.push_back(twist_from_json(twist, info.ngroups));
            terms.push_back(std::move(row));
        }
        if (static_cast<int>(terms.size()) != p1 - p0 + 1)
            input_error("terms length must match the position range");
        std::vector<PolyMatrix> maps;
        for (const auto& m : j.at("maps")) {
            PolyMatrix pm(m.at("rows").get<std::size_t>(), m.at("cols").get<std::size_t>(),
                          info.nvars);
            const json& entries = m.at("entries");
            if (entries.size() != pm.rows * pm.cols)
                input_error("map entry count must equal rows*cols");
            for (std::size_t idx = 0; idx < pm.entries.size(); ++idx)
                pm.entries[idx] = polynomial_from_json(entries[idx], info.nvars);
            maps.push_back(std::move(pm));
        }
        return make_complex(space, p0, std::move(terms), std::move(maps));
    });
}

json adhm_to_json(const AdhmDatum& d) {
    return json{{"k", d.k},
                {"r", d.r},
                {"B1", matrix_to_json(d.b1)},
                {"B2", matrix_to_json(d.b2)},
                {"i", matrix_to_json(d.i)},
                {"j", matrix_to_json(d.j)}};
}

AdhmDatum adhm_from_json(const json& j) {
    return guarded([&] {
        AdhmDatum d;
        d.k = j.at("k").get<std::size_t>();
        d.r = j.at("r").get<std::size_t>();
        d.b1 = matrix_from_json(j.at("B1"));
        d.b2 = matrix_from_json(j.at("B2"));
        d.i = matrix_from_json(j.at("i"));
        d.j = matrix_from_json(j.at("j"));
        validate_adhm(d);
        return d;
    });
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        input_error(std::string("JSON parse failure in ") + path + ": " + e.what());
    }
}

}  // namespace fsq::io
