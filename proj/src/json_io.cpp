#include "bh/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace bh {

namespace {

json perm_to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(errc::bad_input, where + ": permutation must be an array of sheet indices");
    std::vector<int> im;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(errc::bad_input, where + ": non-integer sheet index");
        im.push_back(v.get<int>());
    }
    try {
        return Perm(std::move(im));
    } catch (const Error&) {
        throw Error(errc::bad_input, where + ": image array is not a permutation");
    }
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_number_integer())
        throw Error(errc::bad_input, std::string("missing or non-integer field \"") + field + "\"");
    return j.at(field).get<int>();
}

} // namespace

json cover_to_json(const MonodromyCover& cover) {
    json j;
    j["format"] = 1;
    j["genus"] = cover.sig().genus;
    j["branch_points"] = cover.sig().branch_count;
    j["degree"] = cover.degree();
    json a = json::array(), b = json::array(), c = json::array();
    for (int i = 1; i <= cover.sig().genus; ++i) {
        a.push_back(perm_to_json(cover.image(gen_a(cover.sig(), i))));
        b.push_back(perm_to_json(cover.image(gen_b(cover.sig(), i))));
    }
    for (int i = 1; i <= cover.sig().branch_count; ++i) c.push_back(perm_to_json(cover.c_image(i)));
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    return j;
}

MonodromyCover cover_from_json(const json& j) {
    if (!j.is_object()) throw Error(errc::bad_input, "cover file must be a JSON object");
    Signature sig{require_int(j, "genus"), require_int(j, "branch_points")};
    int degree = require_int(j, "degree");
    for (const char* field : {"a", "b", "c"})
        if (!j.contains(field) || !j.at(field).is_array())
            throw Error(errc::bad_input, std::string("missing or non-array field \"") + field + "\"");
    const json& a = j.at("a");
    const json& b = j.at("b");
    const json& c = j.at("c");
    if (static_cast<int>(a.size()) != sig.genus || static_cast<int>(b.size()) != sig.genus)
        throw Error(errc::bad_input, "\"a\"/\"b\" arrays must each have one permutation per handle");
    if (static_cast<int>(c.size()) != sig.branch_count)
        throw Error(errc::bad_input, "\"c\" array must have one permutation per branch point");
    std::vector<Perm> images(static_cast<size_t>(sig.num_generators()), Perm::identity(degree));
    for (int i = 1; i <= sig.genus; ++i) {
        images[static_cast<size_t>(gen_a(sig, i))] =
            perm_from_json(a[static_cast<size_t>(i - 1)], "a[" + std::to_string(i - 1) + "]");
        images[static_cast<size_t>(gen_b(sig, i))] =
            perm_from_json(b[static_cast<size_t>(i - 1)], "b[" + std::to_string(i - 1) + "]");
    }
    for (int i = 1; i <= sig.branch_count; ++i)
        images[static_cast<size_t>(gen_c(sig, i))] =
            perm_from_json(c[static_cast<size_t>(i - 1)], "c[" + std::to_string(i - 1) + "]");
    return MonodromyCover::validate(sig, degree, std::move(images));
}

json graph_to_json(const CoverGraph& g) {
    json j;
    j["format"] = 1;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j;
}

CoverGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw Error(errc::bad_input, "graph file must be a JSON object");
    CoverGraph g;
    g.vertices = require_int(j, "vertices");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw Error(errc::bad_input, "missing or non-array field \"edges\"");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(errc::bad_input, "each edge must be a pair of vertex indices");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::vector<Automorphism> automorphisms_from_json(const json& j, const Signature& sig) {
    if (!j.is_object() || !j.contains("automorphisms") || !j.at("automorphisms").is_array())
        throw Error(errc::bad_input, "automorphism file needs an \"automorphisms\" array");
    std::vector<Automorphism> gens;
    for (const auto& entry : j.at("automorphisms")) {
        Automorphism f = identity_automorphism(sig);
        if (entry.contains("label") && entry.at("label").is_string()) f.label = entry.at("label").get<std::string>();
        if (!entry.contains("sub") || !entry.at("sub").is_object())
            throw Error(errc::bad_input, "automorphism entry needs a \"sub\" object");
        for (const auto& [key, value] : entry.at("sub").items()) {
            GroupWord lhs = parse_word(key, sig);
            if (lhs.letters.size() != 1 || lhs.letters.front() < 0)
                throw Error(errc::bad_input, "substitution key \"" + key + "\" is not a generator");
            if (!value.is_string()) throw Error(errc::bad_input, "substitution image must be a word string");
            f.sub[static_cast<size_t>(lhs.letters.front() - 1)] = parse_word(value.get<std::string>(), sig);
        }
        if (!relator_preserved(f, sig))
            throw Error(errc::relator_not_preserved, "automorphism '" + f.label + "' does not preserve the relator");
        gens.push_back(std::move(f));
    }
    return gens;
}

json fiber_to_json(const FiberData& fd) {
    json j;
    j["branch_index"] = fd.branch_index;
    j["cycles"] = fd.fiber_cycles.cycles;
    j["ramification"] = fd.ramification;
    j["preimage_count"] = fd.preimage_count;
    return j;
}

json multicurve_to_json(const LiftedMulticurve& mc) {
    json comps = json::array();
    for (const auto& c : mc.components) {
        json jc;
        jc["sheets"] = c.sheets;
        jc["degree"] = c.degree;
        if (c.essential.has_value()) jc["essential"] = *c.essential;
        comps.push_back(jc);
    }
    return comps;
}

json region_graph_to_json(const RegionGraph& rg) {
    json j;
    json nodes = json::array();
    for (const auto& nd : rg.nodes) {
        json n;
        n["side"] = std::string(1, nd.side);
        n["sheets"] = nd.sheets;
        n["chi"] = nd.chi;
        nodes.push_back(n);
    }
    json edges = json::array();
    for (const auto& e : rg.edges) {
        json je;
        je["component"] = e.component;
        je["a_node"] = e.a_node;
        je["b_node"] = e.b_node;
        edges.push_back(je);
    }
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j;
}

json gamma_to_json(const GammaGraph& g) {
    json j;
    j["format"] = 1;
    j["i"] = g.i;
    j["j"] = g.j;
    j["left_cycles"] = g.left_cycles;
    j["right_cycles"] = g.right_cycles;
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je;
        je["sheet"] = e.sheet;
        je["left"] = e.left;
        je["right"] = e.right;
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["forest"] = is_forest(g);
    return j;
}

json orbit_to_json(const OrbitTable& table) {
    json j;
    j["format"] = 1;
    j["size"] = table.classes.size();
    json classes = json::array();
    for (size_t i = 0; i < table.classes.size(); ++i) {
        json entry;
        entry["canonical"] = cover_to_json(table.classes[i].canonical);
        entry["transversal"] = table.transversal_words[i];
        classes.push_back(entry);
    }
    j["classes"] = classes;
    return j;
}

namespace {

json wcl_certificate_to_json(const WclCertificate& cert) {
    json j;
    j["transversal"] = cert.transversal_word;
    j["m"] = cert.m;
    j["components"] = multicurve_to_json(cert.components);
    return j;
}

json simple_certificate_to_json(const SimpleCertificate& cert) {
    json j;
    j["best_effort"] = cert.best_effort;
    if (cert.best_effort) return j;
    j["transversal"] = cert.transversal_word;
    j["i"] = cert.i;
    j["j"] = cert.j;
    j["gamma"] = gamma_to_json(cert.gamma);
    j["forest"] = cert.forest;
    return j;
}

} // namespace

json wcl_to_json(const WclResult& r) {
    json j;
    j["format"] = 1;
    j["holds"] = r.holds;
    j["classes_searched"] = r.classes_searched;
    if (r.certificate) j["certificate"] = wcl_certificate_to_json(*r.certificate);
    return j;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["format"] = 1;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    j["note"] = v.note;
    json cert = json::object();
    if (v.nu_certificate) {
        json fibers = json::array();
        for (const auto& fd : *v.nu_certificate) fibers.push_back(fiber_to_json(fd));
        cert["fibers"] = fibers;
    }
    if (v.simple_cert) cert["simple"] = simple_certificate_to_json(*v.simple_cert);
    if (v.wcl_certificate) cert["wcl"] = wcl_certificate_to_json(*v.wcl_certificate);
    j["certificate"] = cert;
    if (v.wcl_holds.has_value()) j["wcl_holds"] = *v.wcl_holds;
    return j;
}

namespace {

bool is_primitive_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& v : j)
        if (v.is_array() || v.is_object()) return false;
    return true;
}

void pretty_impl(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + json(key).dump() + ": ";
            pretty_impl(value, out, indent + 1);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array() && !is_primitive_array(j)) {
        out += "[\n";
        bool first = true;
        for (const auto& value : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            pretty_impl(value, out, indent + 1);
        }
        out += "\n" + pad + "]";
    } else {
        out += j.dump(); // primitives and flat arrays stay on one line
    }
}

} // namespace

std::string pretty(const json& j) {
    std::string out;
    pretty_impl(j, out, 0);
    out += "\n";
    return out;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::bad_input, "cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(errc::bad_input, path + ": " + e.what());
    }
}

MonodromyCover load_cover_file(const std::string& path) {
    json j = load_json_file(path);
    try {
        return cover_from_json(j);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

} // namespace bh
