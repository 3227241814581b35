#include "mmt/instance.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mmt {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Canonical dump: objects with sorted keys (json's default map order),
// floats at 12 significant digits, no whitespace surprises.
void dump_canonical(const json& j, std::string& out, int indent) {
    const std::string pad(indent * 2, ' ');
    const std::string pad_in((indent + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + "\"" + it.key() + "\": ";
                dump_canonical(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            bool first = true;
            for (const json& item : j) {
                if (!first) out += ", ";
                first = false;
                dump_canonical(item, out, indent);
            }
            out += "]";
            return;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

json star_to_json(const StarNorm& s) {
    json j;
    j["p"] = s.p == kPInf ? json("inf") : json(s.p);
    if (!s.weights.empty()) j["weights"] = s.weights;
    return j;
}

StarNorm star_from_json(const json& j) {
    StarNorm s;
    if (j.at("p").is_string()) {
        if (j.at("p").get<std::string>() != "inf")
            throw ValidationError("star norm: p must be a number >= 1 or \"inf\"");
        s.p = kPInf;
    } else {
        s.p = j.at("p").get<double>();
        if (s.p < 1.0) throw ValidationError("star norm: p must be at least 1");
    }
    if (j.contains("weights")) s.weights = j.at("weights").get<std::vector<double>>();
    return s;
}

json cost_to_json(const CostDescriptor& d) {
    json j;
    j["kind"] = d.kind;
    if (d.kind == "steiner") {
        j["box"] = d.box;
    } else if (d.kind == "gilbert_steiner" || d.kind == "mailing") {
        j["alpha"] = d.alpha;
        j["box"] = d.box;
        if (d.kind == "mailing") j["materials"] = d.m;
    } else if (d.kind == "linear_combination" || d.kind == "plc") {
        j["lambdas"] = d.lambdas;
        j["alphas"] = d.alphas;
        j["box"] = d.box;
    } else if (d.kind == "urban") {
        j["a"] = d.a;
        j["b"] = d.b;
        j["box"] = d.box;
    } else if (d.kind == "table") {
        j["materials"] = d.m;
        j["box"] = d.box;
        j["values"] = d.table;
    } else if (d.kind == "max_of" || d.kind == "composite") {
        json children = json::array();
        for (const CostDescriptor& ch : d.children) children.push_back(cost_to_json(ch));
        j["children"] = children;
        if (d.star) j["star"] = star_to_json(*d.star);
    } else {
        throw ValidationError("cost kind '" + d.kind + "' cannot be serialized");
    }
    return j;
}

CostDescriptor cost_from_json(const json& j) {
    CostDescriptor d;
    d.kind = j.at("kind").get<std::string>();
    if (j.contains("alpha")) d.alpha = j.at("alpha").get<double>();
    if (j.contains("lambdas")) d.lambdas = j.at("lambdas").get<std::vector<double>>();
    if (j.contains("alphas")) d.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("a")) d.a = j.at("a").get<double>();
    if (j.contains("b")) d.b = j.at("b").get<double>();
    if (j.contains("materials")) d.m = j.at("materials").get<int>();
    if (j.contains("box")) d.box = j.at("box").get<IntVec>();
    if (j.contains("values")) d.table = j.at("values").get<std::vector<double>>();
    if (j.contains("star")) d.star = star_from_json(j.at("star"));
    if (j.contains("children"))
        for (const json& ch : j.at("children")) d.children.push_back(cost_from_json(ch));
    return d;
}

json point_to_json(const Point& p) {
    json j = json::array();
    for (double v : p) j.push_back(v);
    return j;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("instance parse error: ") + e.what());
    }
    try {
        InstanceDocument doc;
        doc.version = j.value("version", std::string("1"));
        doc.dimension = j.at("dimension").get<int>();
        doc.materials = j.at("materials").get<int>();
        if (j.contains("boundary")) {
            Boundary b;
            b.dim = doc.dimension;
            b.m = doc.materials;
            for (const json& atom : j.at("boundary")) {
                BoundaryAtom a;
                a.point = atom.at("point").get<Point>();
                a.weight = atom.at("weight").get<IntVec>();
                b.atoms.push_back(std::move(a));
            }
            doc.boundary = std::move(b);
        }
        if (j.contains("cost")) doc.cost = cost_from_json(j.at("cost"));
        if (j.contains("networks")) {
            for (const json& jn : j.at("networks")) {
                NamedNetwork n;
                n.name = jn.value("name", std::string("network"));
                n.labeled = jn.value("labeled", false);
                for (const json& v : jn.at("vertices")) n.vertices.push_back(v.get<Point>());
                for (const json& je : jn.at("edges")) {
                    Edge e;
                    e.tail = je.at("tail").get<int>();
                    e.head = je.at("head").get<int>();
                    e.mult = je.at("multiplicity").get<IntVec>();
                    n.edges.push_back(std::move(e));
                }
                doc.networks.push_back(std::move(n));
            }
        }
        if (j.contains("ball")) {
            BallData ball;
            ball.groups = j.at("ball").at("groups").get<std::vector<int>>();
            if (j.at("ball").contains("vertices"))
                for (const json& v : j.at("ball").at("vertices"))
                    ball.vertices.emplace_back(v.at("pattern").get<IntVec>(),
                                               v.at("c").get<double>());
            if (j.at("ball").contains("pieces")) {
                for (const json& jp : j.at("ball").at("pieces")) {
                    BallPieceData piece;
                    piece.signs = jp.at("signs").get<std::vector<int>>();
                    for (const json& v : jp.at("vertices"))
                        piece.vertices.emplace_back(v.at("pattern").get<IntVec>(),
                                                    v.at("c").get<double>());
                    ball.pieces.push_back(std::move(piece));
                }
            }
            doc.ball = std::move(ball);
        }
        if (j.contains("calibrations")) {
            for (const json& jf : j.at("calibrations")) {
                NamedForm f;
                f.name = jf.value("name", std::string("form"));
                for (const json& row : jf.at("rows")) f.form.rows.push_back(row.get<RealVec>());
                doc.calibrations.push_back(std::move(f));
            }
        }
        if (j.contains("solve")) {
            const json& js = j.at("solve");
            doc.solve.max_steiner = js.value("max_steiner", 2);
            doc.solve.max_permutations = js.value("max_permutations", std::uint64_t(10000));
            doc.solve.seed = js.value("seed", std::uint64_t(0));
            doc.solve.irrigation_identity_only = js.value("irrigation_identity_only", false);
            if (js.contains("grid")) {
                GridSpec g;
                g.nx = js.at("grid").value("nx", 3);
                g.ny = js.at("grid").value("ny", 3);
                g.spacing = js.at("grid").value("spacing", 1.0);
                if (js.at("grid").contains("origin"))
                    g.origin = js.at("grid").at("origin").get<Point>();
                doc.solve.grid = g;
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance field error: ") + e.what());
    }
}

InstanceDocument read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string write_instance(const InstanceDocument& doc) {
    json j;
    j["version"] = doc.version;
    j["dimension"] = doc.dimension;
    j["materials"] = doc.materials;
    if (doc.boundary) {
        json atoms = json::array();
        for (const BoundaryAtom& a : doc.boundary->atoms) {
            json ja;
            ja["point"] = point_to_json(a.point);
            ja["weight"] = a.weight;
            atoms.push_back(ja);
        }
        j["boundary"] = atoms;
    }
    if (doc.cost) j["cost"] = cost_to_json(*doc.cost);
    if (!doc.networks.empty()) {
        json nets = json::array();
        for (const NamedNetwork& n : doc.networks) {
            json jn;
            jn["name"] = n.name;
            jn["labeled"] = n.labeled;
            json verts = json::array();
            for (const Point& p : n.vertices) verts.push_back(point_to_json(p));
            jn["vertices"] = verts;
            json edges = json::array();
            for (const Edge& e : n.edges) {
                json je;
                je["tail"] = e.tail;
                je["head"] = e.head;
                je["multiplicity"] = e.mult;
                edges.push_back(je);
            }
            jn["edges"] = edges;
            nets.push_back(jn);
        }
        j["networks"] = nets;
    }
    if (doc.ball) {
        json jb;
        jb["groups"] = doc.ball->groups;
        auto vertex_array = [](const std::vector<std::pair<IntVec, double>>& vs) {
            json arr = json::array();
            for (const auto& [pattern, c] : vs) {
                json v;
                v["pattern"] = pattern;
                v["c"] = c;
                arr.push_back(v);
            }
            return arr;
        };
        if (!doc.ball->vertices.empty() || doc.ball->pieces.empty())
            jb["vertices"] = vertex_array(doc.ball->vertices);
        if (!doc.ball->pieces.empty()) {
            json pieces = json::array();
            for (const BallPieceData& p : doc.ball->pieces) {
                json jp;
                jp["signs"] = p.signs;
                jp["vertices"] = vertex_array(p.vertices);
                pieces.push_back(jp);
            }
            jb["pieces"] = pieces;
        }
        j["ball"] = jb;
    }
    if (!doc.calibrations.empty()) {
        json forms = json::array();
        for (const NamedForm& f : doc.calibrations) {
            json jf;
            jf["name"] = f.name;
            json rows = json::array();
            for (const RealVec& row : f.form.rows) {
                json jr = json::array();
                for (double v : row) jr.push_back(v);
                rows.push_back(jr);
            }
            jf["rows"] = rows;
            forms.push_back(jf);
        }
        j["calibrations"] = forms;
    }
    {
        json js;
        js["max_steiner"] = doc.solve.max_steiner;
        js["max_permutations"] = doc.solve.max_permutations;
        js["seed"] = doc.solve.seed;
        if (doc.solve.irrigation_identity_only) js["irrigation_identity_only"] = true;
        if (doc.solve.grid) {
            json jg;
            jg["nx"] = doc.solve.grid->nx;
            jg["ny"] = doc.solve.grid->ny;
            jg["spacing"] = doc.solve.grid->spacing;
            jg["origin"] = point_to_json(doc.solve.grid->origin);
            js["grid"] = jg;
        }
        j["solve"] = js;
    }
    std::string out;
    dump_canonical(j, out, 0);
    out += "\n";
    return out;
}

void write_instance_file(const InstanceDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << write_instance(doc);
}

Network to_network(const NamedNetwork& n, int materials, int dimension) {
    Network net;
    net.dim = dimension;
    net.coeff_dim = materials;
    net.vertices = n.vertices;
    net.edges = n.edges;
    net = merge_parallel_edges(net);
    validate(net);
    return net;
}

LabeledNetwork to_labeled_network(const NamedNetwork& n, int labels, int dimension) {
    LabeledNetwork net;
    net.dim = dimension;
    net.coeff_dim = labels;
    net.vertices = n.vertices;
    net.edges = n.edges;
    net = merge_parallel_edges(net);
    validate(net);
    return net;
}

NamedNetwork from_network(const Network& net, const std::string& name) {
    NamedNetwork n;
    n.name = name;
    n.labeled = false;
    n.vertices = net.vertices;
    n.edges = net.edges;
    return n;
}

NamedNetwork from_labeled_network(const LabeledNetwork& net, const std::string& name) {
    NamedNetwork n;
    n.name = name;
    n.labeled = true;
    n.vertices = net.vertices;
    n.edges = net.edges;
    return n;
}

namespace {

std::vector<BallVertex> vertex_list(const std::vector<std::pair<IntVec, double>>& data,
                                    int labels, bool mirror) {
    std::vector<BallVertex> verts;
    auto push_unique = [&verts](BallVertex v) {
        for (const BallVertex& existing : verts)
            if (existing.q == v.q) return;
        verts.push_back(std::move(v));
    };
    for (const auto& [pattern, c] : data) {
        if (static_cast<int>(pattern.size()) != labels)
            throw ValidationError("ball vertex pattern has wrong dimension");
        if (c <= 0) throw ValidationError("ball vertex must have positive c");
        BallVertex v;
        v.pattern = pattern;
        v.c = c;
        v.q.resize(labels);
        for (int k = 0; k < labels; ++k) v.q[k] = pattern[k] / c;
        BallVertex neg = v;
        for (int k = 0; k < labels; ++k) {
            neg.pattern[k] = -neg.pattern[k];
            neg.q[k] = -neg.q[k];
        }
        push_unique(std::move(v));
        if (mirror) push_unique(std::move(neg));
    }
    return verts;
}

}  // namespace

NormBall to_ball(const BallData& data) {
    const int labels = static_cast<int>(data.groups.size());
    if (data.pieces.empty())
        return ball_from_vertices(labels, data.groups, vertex_list(data.vertices, labels, true));
    NormBall ball;
    ball.labels = labels;
    ball.group_of = data.groups;
    ball.supersymmetric = false;
    for (const BallPieceData& p : data.pieces) {
        OrthantPiece piece;
        piece.material_signs = p.signs;
        piece.vertices = vertex_list(p.vertices, labels, true);
        piece.tau.resize(labels);
        for (int j = 0; j < labels; ++j) {
            if (data.groups[j] < 0 || data.groups[j] >= static_cast<int>(p.signs.size()))
                throw ValidationError("ball groups do not match the orthant sign vectors");
            piece.tau[j] = p.signs[data.groups[j]];
        }
        ball.pieces.push_back(std::move(piece));
    }
    return ball;
}

BallData ball_data_of(const NormBall& ball) {
    BallData data;
    data.groups = ball.group_of;
    if (ball.supersymmetric || ball.pieces.empty()) {
        for (const BallVertex& v : ball.hull) data.vertices.emplace_back(v.pattern, v.c);
    } else {
        for (const OrthantPiece& piece : ball.pieces) {
            BallPieceData p;
            p.signs = piece.material_signs;
            for (const BallVertex& v : piece.vertices) p.vertices.emplace_back(v.pattern, v.c);
            data.pieces.push_back(std::move(p));
        }
    }
    return data;
}

}  // namespace mmt
