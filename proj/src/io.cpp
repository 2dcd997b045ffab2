#include "ugtop/io.hpp"

#include <fstream>
#include <sstream>

#include "ugtop/errors.hpp"

namespace ugtop {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw parse_error(line, "bad integer '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        throw parse_error(line, "bad integer '" + s + "'");
    }
}

Perm parse_images(const std::string& s, int line) {
    Perm p;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw parse_error(line, "empty permutation entry");
            p.push_back(parse_int(cur, line));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return p;
}

std::string images_str(const Perm& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

} // namespace

UgifDoc UgifDoc::from(const UGInstance& inst, std::vector<std::string> comments) {
    inst.validate();
    UgifDoc doc;
    doc.type = Type::ug;
    doc.k = inst.k;
    doc.vertices = inst.vertex_count;
    doc.comments = std::move(comments);
    doc.perm_edges = inst.constraints;
    return doc;
}

UgifDoc UgifDoc::from(const Max2LinInstance& inst, std::vector<std::string> comments) {
    inst.validate();
    UgifDoc doc;
    doc.type = Type::max2lin;
    doc.k = inst.k;
    doc.vertices = inst.vertex_count;
    doc.comments = std::move(comments);
    doc.lin_edges = inst.constraints;
    return doc;
}

UgifDoc UgifDoc::from(const GCoveringGraph& cover, std::vector<std::string> comments) {
    cover.validate();
    UgifDoc doc;
    doc.type = Type::cover;
    doc.k = cover.fiber_size;
    doc.vertices = cover.base_vertex_count;
    doc.comments = std::move(comments);
    doc.cover_group = cover.group_tag;
    doc.generators = cover.generators;
    for (std::size_t e = 0; e < cover.base_edges.size(); ++e)
        doc.perm_edges.push_back({cover.base_edges[e].first, cover.base_edges[e].second,
                                  cover.transitions[e]});
    return doc;
}

UGInstance UgifDoc::to_ug() const {
    if (type != Type::ug) throw input_error("UGIF document is not of type ug");
    UGInstance inst;
    inst.k = k;
    inst.vertex_count = vertices;
    inst.constraints = perm_edges;
    inst.validate();
    return inst;
}

Max2LinInstance UgifDoc::to_max2lin() const {
    if (type != Type::max2lin) throw input_error("UGIF document is not of type max2lin");
    Max2LinInstance inst;
    inst.k = k;
    inst.vertex_count = vertices;
    inst.constraints = lin_edges;
    inst.validate();
    return inst;
}

GCoveringGraph UgifDoc::to_cover() const {
    GCoveringGraph cover;
    cover.base_vertex_count = vertices;
    cover.fiber_size = k;
    if (type == Type::max2lin) {
        cover = label_extended(to_max2lin());
    } else {
        for (const auto& c : perm_edges) {
            cover.base_edges.push_back({c.u, c.v});
            cover.transitions.push_back(c.pi);
        }
        cover.group_tag = type == Type::cover ? cover_group : GroupTag::symmetric;
        cover.generators = generators;
    }
    cover.validate();
    return cover;
}

UgifDoc parse_ugif(std::istream& in) {
    UgifDoc doc;
    std::string line;
    int lineno = 0;
    bool have_magic = false, have_type = false, have_k = false, have_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            doc.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
            continue;
        }
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!have_magic) {
            if (tok.size() != 2 || tok[0] != "ugif" || tok[1] != "1")
                throw parse_error(lineno, "expected header 'ugif 1'");
            have_magic = true;
            continue;
        }
        if (tok[0] == "type") {
            if (tok.size() != 2) throw parse_error(lineno, "type takes one argument");
            if (tok[1] == "ug") doc.type = UgifDoc::Type::ug;
            else if (tok[1] == "max2lin") doc.type = UgifDoc::Type::max2lin;
            else if (tok[1] == "cover") doc.type = UgifDoc::Type::cover;
            else throw parse_error(lineno, "unknown type '" + tok[1] + "'");
            have_type = true;
        } else if (tok[0] == "group") {
            if (tok.size() != 2) throw parse_error(lineno, "group takes one argument");
            if (tok[1] == "symmetric") doc.cover_group = GroupTag::symmetric;
            else if (tok[1] == "cyclic") doc.cover_group = GroupTag::cyclic;
            else if (tok[1] == "explicit") doc.cover_group = GroupTag::explicit_generators;
            else throw parse_error(lineno, "unknown group '" + tok[1] + "'");
        } else if (tok[0] == "k") {
            if (tok.size() != 2) throw parse_error(lineno, "k takes one argument");
            doc.k = parse_int(tok[1], lineno);
            have_k = true;
        } else if (tok[0] == "vertices") {
            if (tok.size() != 2) throw parse_error(lineno, "vertices takes one argument");
            doc.vertices = parse_int(tok[1], lineno);
            have_vertices = true;
        } else if (tok[0] == "generator") {
            if (tok.size() != 2) throw parse_error(lineno, "generator takes one argument");
            doc.generators.push_back(parse_images(tok[1], lineno));
        } else if (tok[0] == "edge") {
            if (tok.size() != 5) throw parse_error(lineno, "edge takes U V perm|c VALUE");
            int u = parse_int(tok[1], lineno), v = parse_int(tok[2], lineno);
            if (tok[3] == "perm")
                doc.perm_edges.push_back({u, v, parse_images(tok[4], lineno)});
            else if (tok[3] == "c")
                doc.lin_edges.push_back({u, v, parse_int(tok[4], lineno)});
            else
                throw parse_error(lineno, "edge payload must be 'perm' or 'c'");
        } else {
            throw parse_error(lineno, "unknown key '" + tok[0] + "'");
        }
    }
    if (!have_magic) throw parse_error(lineno, "missing 'ugif 1' header");
    if (!have_type || !have_k || !have_vertices)
        throw parse_error(lineno, "missing required key (type, k or vertices)");
    if (doc.type == UgifDoc::Type::max2lin && !doc.perm_edges.empty())
        throw parse_error(lineno, "max2lin document with permutation edges");
    if (doc.type != UgifDoc::Type::max2lin && !doc.lin_edges.empty())
        throw parse_error(lineno, "permutation document with shift edges");
    return doc;
}

UgifDoc parse_ugif_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return parse_ugif(in);
}

std::string serialize_ugif(const UgifDoc& doc) {
    std::ostringstream out;
    out << "ugif 1\n";
    for (const auto& c : doc.comments) out << "# " << c << "\n";
    out << "type "
        << (doc.type == UgifDoc::Type::ug ? "ug"
                                          : doc.type == UgifDoc::Type::max2lin ? "max2lin" : "cover")
        << "\n";
    if (doc.type == UgifDoc::Type::cover) {
        out << "group "
            << (doc.cover_group == GroupTag::symmetric
                    ? "symmetric"
                    : doc.cover_group == GroupTag::cyclic ? "cyclic" : "explicit")
            << "\n";
    }
    out << "k " << doc.k << "\n";
    out << "vertices " << doc.vertices << "\n";
    for (const auto& g : doc.generators) out << "generator " << images_str(g) << "\n";
    if (doc.type == UgifDoc::Type::max2lin) {
        for (const auto& e : doc.lin_edges)
            out << "edge " << e.u << " " << e.v << " c " << e.c << "\n";
    } else {
        for (const auto& e : doc.perm_edges)
            out << "edge " << e.u << " " << e.v << " perm " << images_str(e.pi) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

ScfDoc ScfDoc::from(const SurfaceComplex& c) {
    ScfDoc doc;
    doc.vertices = c.vertex_count;
    doc.edges = c.edges;
    doc.rotation = c.rotation;
    doc.faces = c.faces;
    return doc;
}

ScfDoc ScfDoc::from(const SurfaceInstance& si) {
    ScfDoc doc = from(si.complex);
    doc.zk = si.cocycle.k;
    doc.zk_labels = si.cocycle.values;
    for (EdgeClass ec : si.prov.edge_class) doc.edge_classes.push_back(edge_class_name(ec));
    doc.universal_vertex = si.prov.universal_vertex;
    return doc;
}

ScfDoc ScfDoc::from(const CoverSurfaceInstance& si) {
    ScfDoc doc = from(si.complex);
    doc.sn = si.labels.values.empty() ? 1 : (int)si.labels.values[0].size();
    doc.sn_labels = si.labels.values;
    for (EdgeClass ec : si.prov.edge_class) doc.edge_classes.push_back(edge_class_name(ec));
    doc.universal_vertex = si.prov.universal_vertex;
    return doc;
}

SurfaceComplex ScfDoc::to_complex() const {
    SurfaceComplex c = make_complex(vertices, edges, rotation);
    if (!faces.empty() && c.faces != faces)
        throw input_error("SCF faces do not match the rotation system");
    return c;
}

Cochain1 ScfDoc::to_cochain() const {
    if (!zk) throw input_error("SCF document has no Z_k group");
    if (zk_labels.size() != edges.size())
        throw input_error("SCF document labels do not cover every edge");
    return Cochain1{*zk, zk_labels};
}

NonAbCochain1 ScfDoc::to_nonab() const {
    if (!sn) throw input_error("SCF document has no S_n group");
    if (sn_labels.size() != edges.size())
        throw input_error("SCF document labels do not cover every edge");
    return NonAbCochain1{sn_labels};
}

SurfaceInstance ScfDoc::to_instance() const {
    SurfaceInstance si;
    si.complex = to_complex();
    si.cocycle = to_cochain();
    si.prov.universal_vertex = universal_vertex;
    if (!edge_classes.empty()) {
        if (edge_classes.size() != edges.size())
            throw input_error("SCF edge classes do not cover every edge");
        for (const auto& name : edge_classes) {
            auto ec = edge_class_from_name(name);
            if (!ec) throw input_error("unknown edge class '" + name + "'");
            si.prov.edge_class.push_back(*ec);
        }
    }
    return si;
}

namespace {

int parse_dart(const std::string& s, int lineno) {
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
        throw parse_error(lineno, "dart must look like +ID or -ID");
    int e = parse_int(s.substr(1), lineno);
    return s[0] == '+' ? 2 * e : 2 * e + 1;
}

std::string dart_str(int d) {
    return std::string((d & 1) == 0 ? "+" : "-") + std::to_string(d >> 1);
}

} // namespace

ScfDoc parse_scf(std::istream& in) {
    ScfDoc doc;
    std::string line;
    int lineno = 0;
    bool have_magic = false, have_vertices = false;
    std::vector<std::pair<int, std::pair<int, int>>> edge_lines;  // id, (u, v)
    std::vector<std::pair<int, std::vector<int>>> rotation_lines;
    std::vector<std::pair<int, std::vector<int>>> face_lines;
    std::vector<std::pair<int, std::string>> label_lines;
    std::vector<std::pair<int, std::string>> class_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            // provenance rides in comments: "# class ID NAME", "# universal V"
            std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
            auto ctok = split_ws(body);
            auto numeric = [](const std::string& s) {
                return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
            };
            if (ctok.size() == 3 && ctok[0] == "class" && numeric(ctok[1])) {
                class_lines.push_back({parse_int(ctok[1], lineno), ctok[2]});
            } else if (ctok.size() == 2 && ctok[0] == "universal" && numeric(ctok[1])) {
                doc.universal_vertex = parse_int(ctok[1], lineno);
            } else {
                doc.comments.push_back(body);
            }
            continue;
        }
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!have_magic) {
            if (tok.size() != 2 || tok[0] != "scf" || tok[1] != "1")
                throw parse_error(lineno, "expected header 'scf 1'");
            have_magic = true;
            continue;
        }
        if (tok[0] == "vertices") {
            if (tok.size() != 2) throw parse_error(lineno, "vertices takes one argument");
            doc.vertices = parse_int(tok[1], lineno);
            have_vertices = true;
        } else if (tok[0] == "group") {
            if (tok.size() != 2 || tok[1].size() < 2)
                throw parse_error(lineno, "group takes Z<k> or S<n>");
            if (tok[1][0] == 'Z') doc.zk = parse_int(tok[1].substr(1), lineno);
            else if (tok[1][0] == 'S') doc.sn = parse_int(tok[1].substr(1), lineno);
            else throw parse_error(lineno, "group must be Z<k> or S<n>");
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw parse_error(lineno, "edge takes ID U V");
            edge_lines.push_back({parse_int(tok[1], lineno),
                                  {parse_int(tok[2], lineno), parse_int(tok[3], lineno)}});
        } else if (tok[0] == "rotation") {
            if (tok.size() < 2 || tok[1].empty() || tok[1].back() != ':')
                throw parse_error(lineno, "rotation takes 'V:' then darts");
            int v = parse_int(tok[1].substr(0, tok[1].size() - 1), lineno);
            std::vector<int> darts;
            for (std::size_t i = 2; i < tok.size(); ++i) darts.push_back(parse_dart(tok[i], lineno));
            rotation_lines.push_back({v, darts});
        } else if (tok[0] == "face") {
            if (tok.size() < 2 || tok[1].empty() || tok[1].back() != ':')
                throw parse_error(lineno, "face takes 'ID:' then darts");
            int f = parse_int(tok[1].substr(0, tok[1].size() - 1), lineno);
            std::vector<int> darts;
            for (std::size_t i = 2; i < tok.size(); ++i) darts.push_back(parse_dart(tok[i], lineno));
            face_lines.push_back({f, darts});
        } else if (tok[0] == "label") {
            if (tok.size() != 3) throw parse_error(lineno, "label takes ID VALUE");
            label_lines.push_back({parse_int(tok[1], lineno), tok[2]});
        } else {
            throw parse_error(lineno, "unknown key '" + tok[0] + "'");
        }
    }
    if (!have_magic) throw parse_error(lineno, "missing 'scf 1' header");
    if (!have_vertices) throw parse_error(lineno, "missing vertices");

    doc.edges.resize(edge_lines.size());
    std::vector<char> seen(edge_lines.size(), 0);
    for (auto& [id, uv] : edge_lines) {
        if (id < 0 || id >= (int)edge_lines.size() || seen[(std::size_t)id])
            throw parse_error(lineno, "edge ids must be 0..E-1 without repeats");
        seen[(std::size_t)id] = 1;
        doc.edges[(std::size_t)id] = uv;
    }
    doc.rotation.assign((std::size_t)doc.vertices, {});
    for (auto& [v, darts] : rotation_lines) {
        if (v < 0 || v >= doc.vertices) throw parse_error(lineno, "rotation vertex out of range");
        doc.rotation[(std::size_t)v] = darts;
    }
    if (!face_lines.empty()) {
        doc.faces.resize(face_lines.size());
        std::vector<char> fseen(face_lines.size(), 0);
        for (auto& [f, darts] : face_lines) {
            if (f < 0 || f >= (int)face_lines.size() || fseen[(std::size_t)f])
                throw parse_error(lineno, "face ids must be 0..F-1 without repeats");
            fseen[(std::size_t)f] = 1;
            doc.faces[(std::size_t)f] = darts;
        }
    }
    if (!label_lines.empty()) {
        if (doc.zk && doc.sn) throw parse_error(lineno, "both Z and S groups declared");
        if (!doc.zk && !doc.sn) throw parse_error(lineno, "labels require a group declaration");
        if (doc.zk) doc.zk_labels.assign(doc.edges.size(), 0);
        else doc.sn_labels.assign(doc.edges.size(), identity_perm(*doc.sn));
        std::vector<char> lseen(doc.edges.size(), 0);
        for (auto& [id, val] : label_lines) {
            if (id < 0 || id >= (int)doc.edges.size())
                throw parse_error(lineno, "label references unknown edge");
            if (lseen[(std::size_t)id]) throw parse_error(lineno, "repeated label");
            lseen[(std::size_t)id] = 1;
            if (doc.zk) doc.zk_labels[(std::size_t)id] = parse_int(val, lineno);
            else doc.sn_labels[(std::size_t)id] = parse_images(val, lineno);
        }
        for (char s : lseen)
            if (!s) throw parse_error(lineno, "labels must cover every edge");
    }
    if (!class_lines.empty()) {
        doc.edge_classes.assign(doc.edges.size(), "");
        for (auto& [id, name] : class_lines) {
            if (id < 0 || id >= (int)doc.edges.size())
                throw parse_error(lineno, "class references unknown edge");
            doc.edge_classes[(std::size_t)id] = name;
        }
        for (const auto& s : doc.edge_classes)
            if (s.empty()) throw parse_error(lineno, "classes must cover every edge");
    }
    return doc;
}

ScfDoc parse_scf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return parse_scf(in);
}

std::string serialize_scf(const ScfDoc& doc) {
    std::ostringstream out;
    out << "scf 1\n";
    for (const auto& c : doc.comments) out << "# " << c << "\n";
    out << "vertices " << doc.vertices << "\n";
    if (doc.zk) out << "group Z" << *doc.zk << "\n";
    if (doc.sn) out << "group S" << *doc.sn << "\n";
    for (std::size_t e = 0; e < doc.edges.size(); ++e)
        out << "edge " << e << " " << doc.edges[e].first << " " << doc.edges[e].second << "\n";
    for (std::size_t v = 0; v < doc.rotation.size(); ++v) {
        out << "rotation " << v << ":";
        for (int d : doc.rotation[v]) out << " " << dart_str(d);
        out << "\n";
    }
    for (std::size_t f = 0; f < doc.faces.size(); ++f) {
        out << "face " << f << ":";
        for (int d : doc.faces[f]) out << " " << dart_str(d);
        out << "\n";
    }
    if (doc.zk)
        for (std::size_t e = 0; e < doc.zk_labels.size(); ++e)
            out << "label " << e << " " << doc.zk_labels[e] << "\n";
    if (doc.sn)
        for (std::size_t e = 0; e < doc.sn_labels.size(); ++e)
            out << "label " << e << " " << images_str(doc.sn_labels[e]) << "\n";
    for (std::size_t e = 0; e < doc.edge_classes.size(); ++e)
        out << "# class " << e << " " << doc.edge_classes[e] << "\n";
    if (doc.universal_vertex) out << "# universal " << *doc.universal_vertex << "\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open " + path + " for writing");
    out << content;
}

} // namespace ugtop
