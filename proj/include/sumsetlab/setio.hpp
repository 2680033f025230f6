#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sumsetlab/gset.hpp"

namespace sumsetlab {

using json = nlohmann::ordered_json;

// Context descriptors as they appear in config files and set-file headers:
//   {"kind":"lattice","d":2}  {"kind":"cyclic","N":101}
//   {"kind":"vector","p":2,"n":16}  {"kind":"primeproduct","q":3,"primes":[5,7,11]}
inline json ctx_to_json(const GroupCtx& ctx) {
    json j;
    j["kind"] = kind_name(ctx.kind());
    switch (ctx.kind()) {
        case GroupKind::lattice: j["d"] = ctx.arity(); break;
        case GroupKind::cyclic: j["N"] = ctx.cyclic_modulus(); break;
        case GroupKind::vector_space:
            j["p"] = ctx.field_prime();
            j["n"] = ctx.arity();
            break;
        case GroupKind::prime_product:
            j["q"] = ctx.product_head();
            j["primes"] = ctx.product_primes();
            break;
    }
    return j;
}

inline GroupCtx ctx_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw BadParams("context descriptor needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "lattice") return GroupCtx::lattice(j.at("d").get<int>());
        if (kind == "cyclic") return GroupCtx::cyclic(j.at("N").get<i64>());
        if (kind == "vector")
            return GroupCtx::vector_space(j.at("p").get<i64>(), j.at("n").get<int>());
        if (kind == "primeproduct")
            return GroupCtx::prime_product(j.at("q").get<i64>(),
                                           j.at("primes").get<std::vector<i64>>());
    } catch (const json::exception& e) {
        throw BadParams(std::string("malformed context descriptor: ") + e.what());
    }
    throw BadParams("unknown context kind: " + kind);
}

// Set literal format: optional "# ctx: {...}" header, then one element per
// line with comma-separated coordinates; "#" starts a comment.  print/parse
// round-trips bit-exactly on canonical files.
inline std::string print_set(const GSet& g) {
    std::string out = "# ctx: " + ctx_to_json(g.ctx()).dump() + "\n";
    for (const Element& e : g.elems()) {
        for (size_t i = 0; i < e.coords.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(e.coords[i]);
        }
        out += "\n";
    }
    return out;
}

inline GSet parse_set(const std::string& text, std::optional<GroupCtx> ctx = std::nullopt) {
    std::istringstream in(text);
    std::string line;
    std::vector<Element> elems;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::string comment = line.substr(hash + 1);
            auto tag = comment.find("ctx:");
            if (tag != std::string::npos && !ctx.has_value())
                ctx = ctx_from_json(json::parse(comment.substr(tag + 4)));
            line = line.substr(0, hash);
        }
        // tolerate surrounding whitespace, skip blank lines
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        std::vector<i64> coords;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            try {
                coords.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw IoError("malformed coordinate: \"" + tok + "\"");
            }
        }
        elems.push_back(Element(std::move(coords)));
    }
    if (!ctx.has_value())
        throw IoError("set literal has no context: add a \"# ctx: {...}\" header or pass one");
    return GSet(*ctx, std::move(elems));
}

inline void write_set_file(const std::string& path, const GSet& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << print_set(g);
    if (!out) throw IoError("write failed: " + path);
}

inline GSet read_set_file(const std::string& path, std::optional<GroupCtx> ctx = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_set(buf.str(), std::move(ctx));
}

}  // namespace sumsetlab
