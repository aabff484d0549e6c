#include "latkit/jsonio.hpp"

#include <fstream>

namespace latkit {

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw domain_error("expected an integer (number or decimal string)");
}

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

}  // namespace

IntegerLattice lattice_from_json(const Json& j, bool allow_degenerate) {
    if (!j.is_object() || !j.contains("gram"))
        throw domain_error("lattice JSON must be an object with a \"gram\" field");
    const Json& gram = j.at("gram");
    if (!gram.is_array() || gram.empty())
        throw domain_error("\"gram\" must be a non-empty array of rows");
    const std::size_t n = gram.size();
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != n)
        throw domain_error("\"rank\" does not match the Gram matrix size");
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = gram.at(i);
        if (!row.is_array() || row.size() != n)
            throw domain_error("\"gram\" must be a square matrix");
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = int_from_json(row.at(k));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const Json& l : j.at("labels")) labels.push_back(l.get<std::string>());
        if (labels.size() != n) throw domain_error("label count does not match rank");
    }
    if (!is_symmetric(m)) throw domain_error("Gram matrix is not symmetric");
    return allow_degenerate ? IntegerLattice::make_span(std::move(m), std::move(labels))
                            : IntegerLattice::make(std::move(m), std::move(labels));
}

Json lattice_to_json(const IntegerLattice& l) {
    Json j;
    j["rank"] = l.rank();
    Json gram = Json::array();
    for (std::size_t i = 0; i < l.gram.rows; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < l.gram.cols; ++k) row.push_back(int_to_json(l.gram.at(i, k)));
        gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    if (!l.labels.empty()) j["labels"] = l.labels;
    return j;
}

ZMat vectors_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vectors"))
        throw domain_error("embedding JSON must be an object with a \"vectors\" field");
    const Json& vs = j.at("vectors");
    if (!vs.is_array() || vs.empty()) throw domain_error("\"vectors\" must be non-empty");
    const std::size_t k = vs.size(), n = vs.at(0).size();
    ZMat m(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        const Json& row = vs.at(i);
        if (!row.is_array() || row.size() != n)
            throw domain_error("\"vectors\" rows must all have the same length");
        for (std::size_t c = 0; c < n; ++c) m.at(i, c) = int_from_json(row.at(c));
    }
    return m;
}

Json vectors_to_json(const ZMat& m) {
    Json vs = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(int_to_json(m.at(i, c)));
        vs.push_back(std::move(row));
    }
    Json j;
    j["vectors"] = std::move(vs);
    return j;
}

CurveGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw domain_error("graph JSON needs \"vertices\" and \"edges\"");
    CurveGraph g;
    for (const Json& v : j.at("vertices")) {
        std::string label = v.at("label").get<std::string>();
        Int self = v.contains("self") ? int_from_json(v.at("self")) : Int(-2);
        bool bold = v.contains("bold") && v.at("bold").get<bool>();
        g.add_vertex(label, self, bold);
    }
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw domain_error("each edge must be [u, v] or [u, v, weight]");
        long w = e.size() == 3 ? e.at(2).get<long>() : 1;
        g.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>(), w);
    }
    return g;
}

Json graph_to_json(const CurveGraph& g) {
    Json j;
    Json vs = Json::array();
    for (const auto& v : g.vertices) {
        Json jv;
        jv["label"] = v.label;
        jv["self"] = int_to_json(v.self);
        jv["bold"] = v.bold;
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.weight(u, v) != 0)
                es.push_back(Json::array({g.vertices[u].label, g.vertices[v].label,
                                          g.weight(u, v)}));
    j["edges"] = std::move(es);
    return j;
}

Json qvec_to_json(const QVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(to_string(x));
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace latkit
