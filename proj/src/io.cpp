#include "asklab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace asklab {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write " + path);
    out << content;
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        Int v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                   &j.get_ref<const std::uint64_t&>());
        return v;
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        Int v;
        if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
            throw InvalidInputError("bad integer literal \"" + s + "\"");
        return v;
    }
    throw InvalidInputError("expected an integer, got " + j.dump());
}

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

ModuleRep rep_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("l") || !j.contains("d") || !j.contains("e") ||
        !j.contains("tensor"))
        throw ShapeMismatchError("module representation needs l, d, e and tensor fields");
    int l = j.at("l").get<int>(), d = j.at("d").get<int>(), e = j.at("e").get<int>();
    if (l < 0 || d < 0 || e < 0) throw ShapeMismatchError("negative rank");
    const nlohmann::json& t = j.at("tensor");
    if (!t.is_array() || static_cast<int>(t.size()) != l)
        throw ShapeMismatchError("tensor has " + std::to_string(t.size()) +
                                 " slices, expected l=" + std::to_string(l));
    std::vector<Int> data;
    data.reserve(static_cast<std::size_t>(l) * d * e);
    for (int k = 0; k < l; ++k) {
        const nlohmann::json& slice = t.at(k);
        if (!slice.is_array() || static_cast<int>(slice.size()) != d)
            throw ShapeMismatchError("tensor[" + std::to_string(k) + "] has " +
                                     std::to_string(slice.size()) +
                                     " rows, expected d=" + std::to_string(d));
        for (int i = 0; i < d; ++i) {
            const nlohmann::json& row = slice.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != e)
                throw ShapeMismatchError("tensor[" + std::to_string(k) + "][" +
                                         std::to_string(i) + "] has " +
                                         std::to_string(row.size()) +
                                         " entries, expected e=" + std::to_string(e));
            for (int jj = 0; jj < e; ++jj) data.push_back(int_from_json(row.at(jj)));
        }
    }
    ModuleRep rep(l, d, e, std::move(data));
    if (j.contains("name")) rep.set_name(j.at("name").get<std::string>());
    return rep;
}

nlohmann::json rep_to_json(const ModuleRep& rep) {
    nlohmann::json t = nlohmann::json::array();
    for (int k = 0; k < rep.l(); ++k) {
        nlohmann::json slice = nlohmann::json::array();
        for (int i = 0; i < rep.d(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < rep.e(); ++j) row.push_back(int_to_json(rep.c(k, i, j)));
            slice.push_back(std::move(row));
        }
        t.push_back(std::move(slice));
    }
    nlohmann::json j{{"l", rep.l()}, {"d", rep.d()}, {"e", rep.e()}, {"tensor", std::move(t)}};
    if (!rep.name().empty()) j["name"] = rep.name();
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ShapeMismatchError("graph needs n and edges fields");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ShapeMismatchError("edge " + e.dump() + " is not a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    return Graph::make(j.at("n").get<int>(), std::move(edges), std::move(name));
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    nlohmann::json j{{"n", g.n}, {"edges", std::move(edges)}};
    if (!g.name.empty()) j["name"] = g.name;
    return j;
}

LieData lie_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("basis"))
        throw ShapeMismatchError("lie data needs n and basis fields");
    LieData lie;
    lie.n = j.at("n").get<int>();
    if (lie.n < 0) throw ShapeMismatchError("negative matrix size");
    for (const auto& b : j.at("basis")) {
        if (!b.is_array() || static_cast<int>(b.size()) != lie.n)
            throw ShapeMismatchError("basis matrix has " + std::to_string(b.size()) +
                                     " rows, expected " + std::to_string(lie.n));
        IntMatrix m(lie.n, lie.n);
        for (int i = 0; i < lie.n; ++i) {
            const auto& row = b.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != lie.n)
                throw ShapeMismatchError("basis row has " + std::to_string(row.size()) +
                                         " entries, expected " + std::to_string(lie.n));
            for (int jj = 0; jj < lie.n; ++jj) m.at(i, jj) = int_from_json(row.at(jj));
        }
        lie.basis.push_back(std::move(m));
    }
    if (j.contains("name")) lie.name = j.at("name").get<std::string>();
    return lie;
}

nlohmann::json lie_to_json(const LieData& lie) {
    nlohmann::json basis = nlohmann::json::array();
    for (const IntMatrix& m : lie.basis) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < lie.n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < lie.n; ++j) row.push_back(int_to_json(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        basis.push_back(std::move(rows));
    }
    nlohmann::json j{{"n", lie.n}, {"basis", std::move(basis)}};
    if (!lie.name.empty()) j["name"] = lie.name;
    return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
        throw ShapeMismatchError("laurent polynomial needs min_exp and coeffs fields");
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return LaurentPoly(j.at("min_exp").get<long>(), std::move(coeffs));
}

nlohmann::json laurent_to_json(const LaurentPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(int_to_json(c));
    return nlohmann::json{{"min_exp", f.min_exp()}, {"coeffs", std::move(coeffs)}};
}

SRingElem sring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("laurent"))
        throw ShapeMismatchError("S-ring element needs a laurent field");
    SRingElem s;
    s.numerator = laurent_from_json(j.at("laurent"));
    if (j.contains("geom_factors"))
        for (const auto& n : j.at("geom_factors")) {
            long v = n.get<long>();
            if (v < 1) throw ShapeMismatchError("geometric factor must be >= 1");
            s.geom_factors.push_back(v);
        }
    std::sort(s.geom_factors.begin(), s.geom_factors.end());
    return s;
}

nlohmann::json sring_to_json(const SRingElem& s) {
    return nlohmann::json{{"laurent", laurent_to_json(s.numerator)},
                          {"geom_factors", s.geom_factors}};
}

AffineScheme scheme_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("polys"))
        throw ShapeMismatchError("scheme needs vars and polys fields");
    AffineScheme y;
    y.vars = j.at("vars").get<int>();
    for (const auto& poly : j.at("polys")) {
        std::vector<PolyTerm> terms;
        for (const auto& term : poly) {
            PolyTerm t;
            t.coeff = int_from_json(term.at("coeff"));
            for (const auto& e : term.at("exps")) t.exps.push_back(e.get<unsigned>());
            terms.push_back(std::move(t));
        }
        y.polys.push_back(std::move(terms));
    }
    if (j.contains("name")) y.name = j.at("name").get<std::string>();
    y.validate();
    return y;
}

nlohmann::json scheme_to_json(const AffineScheme& y) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& poly : y.polys) {
        nlohmann::json terms = nlohmann::json::array();
        for (const PolyTerm& t : poly)
            terms.push_back({{"coeff", int_to_json(t.coeff)}, {"exps", t.exps}});
        polys.push_back(std::move(terms));
    }
    nlohmann::json j{{"vars", y.vars}, {"polys", std::move(polys)}};
    if (!y.name.empty()) j["name"] = y.name;
    return j;
}

BBDecomposition decomp_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("graphs") || !j.contains("coeffs"))
        throw ShapeMismatchError("decomposition needs graphs and coeffs fields");
    BBDecomposition d;
    for (const auto& g : j.at("graphs")) d.graphs.push_back(graph_from_json(g));
    for (const auto& c : j.at("coeffs")) d.coeffs.push_back(sring_from_json(c));
    d.validate();
    return d;
}

nlohmann::json decomp_to_json(const BBDecomposition& d) {
    nlohmann::json graphs = nlohmann::json::array(), coeffs = nlohmann::json::array();
    for (const Graph& g : d.graphs) graphs.push_back(graph_to_json(g));
    for (const SRingElem& s : d.coeffs) coeffs.push_back(sring_to_json(s));
    return nlohmann::json{{"graphs", std::move(graphs)}, {"coeffs", std::move(coeffs)}};
}

namespace {

nlohmann::json resolve_entry(const nlohmann::json& entry, const char* inline_key,
                             const std::filesystem::path& base) {
    if (entry.contains("path")) {
        std::filesystem::path p = entry.at("path").get<std::string>();
        if (p.is_relative()) p = base / p;
        return load_json_file(p.string());
    }
    if (entry.contains(inline_key)) return entry.at(inline_key);
    throw InvalidInputError("config entry needs a path or an inline " +
                            std::string(inline_key));
}

}  // namespace

BatteryConfig load_battery_config(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    BatteryConfig config;
    for (const auto& entry : j.value("reps", nlohmann::json::array())) {
        RepEntry re;
        re.rep = rep_from_json(resolve_entry(entry, "rep", base));
        if (entry.contains("expect")) {
            const auto& ex = entry.at("expect");
            if (ex.contains("alternating")) re.expect_alternating = ex.at("alternating").get<bool>();
            if (ex.contains("immersive")) re.expect_immersive = ex.at("immersive").get<bool>();
        }
        config.reps.push_back(std::move(re));
    }
    for (const auto& entry : j.value("graphs", nlohmann::json::array()))
        config.graphs.push_back(graph_from_json(resolve_entry(entry, "graph", base)));
    for (const auto& entry : j.value("lie", nlohmann::json::array()))
        config.lie.push_back(lie_from_json(resolve_entry(entry, "lie", base)));
    for (const auto& entry : j.value("pipelines", nlohmann::json::array())) {
        PipelineEntry pe;
        pe.scheme = scheme_from_json(resolve_entry(entry, "scheme", base));
        nlohmann::json dj;
        if (entry.contains("decomposition_path")) {
            std::filesystem::path p = entry.at("decomposition_path").get<std::string>();
            if (p.is_relative()) p = base / p;
            dj = load_json_file(p.string());
        } else if (entry.contains("decomposition")) {
            dj = entry.at("decomposition");
        } else {
            throw InvalidInputError("pipeline entry needs a decomposition");
        }
        pe.decomp = decomp_from_json(dj);
        config.pipelines.push_back(std::move(pe));
    }
    for (const auto& q : j.value("q", nlohmann::json::array()))
        config.qs.push_back(PrimePower::from_q(q.get<std::uint64_t>()));
    config.m_max = j.value("m_max", 3);
    config.n_max = j.value("n_max", 3);
    return config;
}

std::vector<std::pair<PrimePower, Rat>> load_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("empty sample table " + path);
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
    };
    if (strip(line) != "q_p,q_f,num,den_exp")
        throw InvalidInputError("sample table must start with header q_p,q_f,num,den_exp");
    std::vector<std::pair<PrimePower, Rat>> samples;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string qp, qf, num, den;
        if (!std::getline(row, qp, ',') || !std::getline(row, qf, ',') ||
            !std::getline(row, num, ',') || !std::getline(row, den, ','))
            throw InvalidInputError("bad sample row: " + line);
        PrimePower q = PrimePower::make(std::stoull(strip(qp)),
                                        static_cast<unsigned>(std::stoul(strip(qf))));
        Int n;
        if (mpz_set_str(n.get_mpz_t(), strip(num).c_str(), 10) != 0)
            throw InvalidInputError("bad numerator in row: " + line);
        long den_exp = std::stol(strip(den));
        Rat value = Rat(n) * rat_pow(q.q, -den_exp);
        samples.emplace_back(q, value);
    }
    return samples;
}

}  // namespace asklab
