#include "covertex/io.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace covertex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw IoError(what); }

void expect_keys(const json& obj, std::initializer_list<const char*> keys,
                 const char* where) {
    if (!obj.is_object()) bad(std::string(where) + " must be an object");
    for (const char* k : keys) {
        if (!obj.contains(k)) bad(std::string(where) + " is missing field '" + k + "'");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        if (!known) bad(std::string(where) + " has unknown field '" + item.key() + "'");
    }
}

long integer_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) bad(where + " must be an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
        bad(where + " is too large");
    }
    return v.get<long>();
}

Rational scalar_field(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where + " must be a scalar string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ContractViolation& e) {
        bad(where + ": " + e.what());
    }
}

}  // namespace

VertexCoalgebra parse_coalgebra(const std::string& text, std::string name) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("not valid structured text: ") + e.what());
    }
    expect_keys(root, {"dimension", "counit", "coproducts"}, "coalgebra");

    const long dim_l = integer_field(root["dimension"], "dimension");
    if (dim_l < 1) bad("dimension must be >= 1");
    if (dim_l > std::numeric_limits<int>::max()) bad("dimension does not fit");
    const int dim = static_cast<int>(dim_l);

    VertexCoalgebra V = make_coalgebra(std::move(name), dim);

    const json& counit = root["counit"];
    if (!counit.is_array()) bad("counit must be an array of scalar strings");
    if (static_cast<long>(counit.size()) != dim_l) {
        bad("counit length must equal the dimension");
    }
    for (int i = 0; i < dim; ++i) {
        const Rational v = scalar_field(counit[static_cast<std::size_t>(i)],
                                        "counit[" + std::to_string(i) + "]");
        if (!v.is_zero()) V.counit.set(i, v);
    }

    const json& cops = root["coproducts"];
    if (!cops.is_array()) bad("coproducts must be an array");
    std::set<long> seen_degrees;
    for (std::size_t c = 0; c < cops.size(); ++c) {
        const std::string where = "coproducts[" + std::to_string(c) + "]";
        const json& rec = cops[c];
        expect_keys(rec, {"n", "entries"}, where.c_str());
        const long n = integer_field(rec["n"], where + ".n");
        if (!seen_degrees.insert(n).second) {
            bad(where + " repeats degree " + std::to_string(n));
        }
        const json& entries = rec["entries"];
        if (!entries.is_array()) bad(where + ".entries must be an array");
        if (entries.empty()) bad(where + " stores a zero component");
        std::set<std::array<long, 3>> seen_triples;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string ewhere = where + ".entries[" + std::to_string(e) + "]";
            const json& entry = entries[e];
            if (!entry.is_array() || entry.size() != 4) {
                bad(ewhere + " must be [i, j, k, \"coeff\"]");
            }
            const long i = integer_field(entry[0], ewhere + "[0]");
            const long j = integer_field(entry[1], ewhere + "[1]");
            const long k = integer_field(entry[2], ewhere + "[2]");
            for (long idx : {i, j, k}) {
                if (idx < 0 || idx >= dim_l) {
                    bad(ewhere + " index " + std::to_string(idx) +
                        " outside [0," + std::to_string(dim_l) + ")");
                }
            }
            if (!seen_triples.insert({i, j, k}).second) {
                bad(ewhere + " repeats an index triple");
            }
            const Rational v = scalar_field(entry[3], ewhere + "[3]");
            if (v.is_zero()) bad(ewhere + " stores a zero coefficient");
            V.family.add_term(n, static_cast<int>(i),
                              Idx2{static_cast<int>(j), static_cast<int>(k)}, v);
        }
    }
    return V;
}

std::string emit_coalgebra(const VertexCoalgebra& V) {
    ordered_json root;
    root["dimension"] = V.dim;

    ordered_json counit = ordered_json::array();
    for (int i = 0; i < V.dim; ++i) counit.push_back(V.counit.at(i).str());
    root["counit"] = std::move(counit);

    ordered_json cops = ordered_json::array();
    for (const auto& [n, component] : V.family.maps()) {
        ordered_json rec;
        rec["n"] = n;
        ordered_json entries = ordered_json::array();
        for (const auto& [i, col] : component.columns()) {
            for (const auto& [jk, v] : col.entries()) {
                entries.push_back(ordered_json::array({i, jk.a, jk.b, v.str()}));
            }
        }
        rec["entries"] = std::move(entries);
        cops.push_back(std::move(rec));
    }
    root["coproducts"] = std::move(cops);
    return root.dump(2) + "\n";
}

VertexCoalgebra load_coalgebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) bad("failed reading '" + path + "'");
    return parse_coalgebra(buf.str(), path);
}

void save_coalgebra(const VertexCoalgebra& V, const std::string& path) {
    const std::string text = emit_coalgebra(V);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) bad("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out.good()) bad("failed writing '" + path + "'");
}

}  // namespace covertex
