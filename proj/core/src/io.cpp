#include "triplekit/io.hpp"

#include <fstream>
#include <sstream>

namespace triplekit {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

std::string dump_json(const Json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file '" + path + "' for writing");
    out << text;
    if (!out) throw ParseError("write to '" + path + "' failed");
}

AlgebraKind algebra_kind_from_string(const std::string& s) {
    if (s == "fkts") return AlgebraKind::Fkts;
    if (s == "jternary") return AlgebraKind::JTernary;
    if (s == "dicyclic") return AlgebraKind::Dicyclic;
    if (s == "lie") return AlgebraKind::Lie;
    throw ParseError("unknown kind '" + s + "' (expected fkts, jternary, dicyclic or lie)");
}

const char* to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Fkts: return "fkts";
        case AlgebraKind::JTernary: return "jternary";
        case AlgebraKind::Dicyclic: return "dicyclic";
        case AlgebraKind::Lie: return "lie";
    }
    return "?";
}

AlgebraKind file_kind(const Json& j) {
    const Json& k = iodetail::require(j, "kind", "file");
    if (!k.is_string()) throw ParseError("file.kind: expected a string");
    return algebra_kind_from_string(k.get<std::string>());
}

ScalarKind file_scalar_kind(const Json& j) {
    const Json& s = iodetail::require(j, "scalars", "file");
    if (s == "Q") return ScalarKind::Q;
    if (s == "Q(w)") return ScalarKind::QOmega;
    throw ParseError("file.scalars: expected \"Q\" or \"Q(w)\"");
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a scalar string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Cyc cyc_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) return Cyc(rational_from_json(j, where));
    if (j.is_object()) {
        Rational a, b;
        if (j.contains("a")) a = rational_from_json(j.at("a"), where + ".a");
        if (j.contains("b")) b = rational_from_json(j.at("b"), where + ".b");
        for (const auto& [key, _] : j.items())
            if (key != "a" && key != "b")
                throw ParseError(where + ": unexpected key '" + key + "' in scalar object");
        return Cyc(std::move(a), std::move(b));
    }
    throw ParseError(where + ": expected \"p/q\" or {\"a\": \"p/q\", \"b\": \"r/s\"}");
}

Json scalar_to_json(const Rational& x) { return x.str(); }

Json scalar_to_json(const Cyc& x) {
    if (x.is_rational()) return x.a().str();
    return Json{{"a", x.a().str()}, {"b", x.b().str()}};
}

} // namespace triplekit
