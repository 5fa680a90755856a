#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "triplekit/dicyclic.hpp"
#include "triplekit/fkts.hpp"
#include "triplekit/jternary.hpp"
#include "triplekit/lie_algebra.hpp"

namespace triplekit {

using Json = nlohmann::ordered_json;

enum class AlgebraKind { Fkts, JTernary, Dicyclic, Lie };
enum class ScalarKind { Q, QOmega };

// Non-template plumbing, implemented in io.cpp.
Json load_json_file(const std::string& path);
std::string dump_json(const Json& j, bool pretty);
void write_text_file(const std::string& path, const std::string& text);

AlgebraKind algebra_kind_from_string(const std::string& s);
const char* to_string(AlgebraKind k);
AlgebraKind file_kind(const Json& j);
ScalarKind file_scalar_kind(const Json& j);

Rational rational_from_json(const Json& j, const std::string& where);
Cyc cyc_from_json(const Json& j, const std::string& where);
Json scalar_to_json(const Rational& x);
Json scalar_to_json(const Cyc& x);

template <ScalarField K>
K scalar_from_json(const Json& j, const std::string& where);
template <>
inline Rational scalar_from_json<Rational>(const Json& j, const std::string& where) {
    return rational_from_json(j, where);
}
template <>
inline Cyc scalar_from_json<Cyc>(const Json& j, const std::string& where) {
    return cyc_from_json(j, where);
}

inline const char* to_string(ScalarKind s) { return s == ScalarKind::Q ? "Q" : "Q(w)"; }
template <ScalarField K>
constexpr ScalarKind scalar_kind_of() {
    return has_omega<K> ? ScalarKind::QOmega : ScalarKind::Q;
}

namespace iodetail {

inline const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing key '" + std::string(key) + "'");
    return *it;
}

inline std::size_t require_dim(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_number_unsigned())
        throw ParseError(where + "." + key + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline int require_sign(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw ParseError(where + "." + key + ": expected an integer");
    long s = v.get<long>();
    if (s != 1 && s != -1) throw ParseError(where + "." + key + ": expected 1 or -1");
    return static_cast<int>(s);
}

inline std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(where + ": expected a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline std::size_t entry_index(const Json& e, std::size_t pos, std::size_t bound,
                               const std::string& where) {
    const Json& v = e.at(pos);
    if (!v.is_number_unsigned())
        throw ParseError(where + ": index " + std::to_string(pos) + " is not a non-negative integer");
    std::size_t i = v.get<std::size_t>();
    if (i >= bound)
        throw ParseError(where + ": index " + std::to_string(i) + " out of range (dim " +
                         std::to_string(bound) + ")");
    return i;
}

} // namespace iodetail

template <ScalarField K>
Vec<K> vec_from_json(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(where + ": expected a list of " + std::to_string(n) + " scalars");
    Vec<K> v(n, K::zero());
    for (std::size_t i = 0; i < n; ++i)
        v[i] = scalar_from_json<K>(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

template <ScalarField K>
Json vec_to_json(const Vec<K>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(scalar_to_json(c));
    return out;
}

/// Sparse matrix entries [[row, col, scalar], ...]; omitted entries are zero.
template <ScalarField K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                           const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of [i, j, scalar] entries");
    Matrix<K> m(rows, cols);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string at = where + "[" + std::to_string(e) + "]";
        const Json& entry = j[e];
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError(at + ": expected [row, col, scalar]");
        std::size_t r = iodetail::entry_index(entry, 0, rows, at);
        std::size_t c = iodetail::entry_index(entry, 1, cols, at);
        m.at(r, c) = scalar_from_json<K>(entry[2], at);
    }
    return m;
}

template <ScalarField K>
Json matrix_to_json(const Matrix<K>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) out.push_back(Json::array({i, j, scalar_to_json(m.at(i, j))}));
    return out;
}

template <ScalarField K>
BilinearTensor<K> bilinear_from_json(const Json& j, BasedSpace lhs, BasedSpace rhs, BasedSpace out,
                                     const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of [i, j, k, scalar] entries");
    BilinearTensor<K> t(std::move(lhs), std::move(rhs), std::move(out));
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string at = where + "[" + std::to_string(e) + "]";
        const Json& entry = j[e];
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError(at + ": expected [i, j, k, scalar]");
        std::size_t a = iodetail::entry_index(entry, 0, t.lhs().dim(), at);
        std::size_t b = iodetail::entry_index(entry, 1, t.rhs().dim(), at);
        std::size_t c = iodetail::entry_index(entry, 2, t.out().dim(), at);
        t.at(a, b, c) = scalar_from_json<K>(entry[3], at);
    }
    return t;
}

template <ScalarField K>
Json bilinear_to_json(const BilinearTensor<K>& t) {
    Json out = Json::array();
    for (std::size_t i = 0; i < t.lhs().dim(); ++i)
        for (std::size_t j = 0; j < t.rhs().dim(); ++j)
            for (std::size_t k = 0; k < t.out().dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    out.push_back(Json::array({i, j, k, scalar_to_json(t.at(i, j, k))}));
    return out;
}

template <ScalarField K>
TrilinearTensor<K> trilinear_from_json(const Json& j, BasedSpace s1, BasedSpace s2, BasedSpace s3,
                                       BasedSpace out, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected a list of [i, j, k, l, scalar] entries");
    TrilinearTensor<K> t(std::move(s1), std::move(s2), std::move(s3), std::move(out));
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string at = where + "[" + std::to_string(e) + "]";
        const Json& entry = j[e];
        if (!entry.is_array() || entry.size() != 5)
            throw ParseError(at + ": expected [i, j, k, l, scalar]");
        std::size_t a = iodetail::entry_index(entry, 0, t.s1().dim(), at);
        std::size_t b = iodetail::entry_index(entry, 1, t.s2().dim(), at);
        std::size_t c = iodetail::entry_index(entry, 2, t.s3().dim(), at);
        std::size_t d = iodetail::entry_index(entry, 3, t.out().dim(), at);
        t.at(a, b, c, d) = scalar_from_json<K>(entry[4], at);
    }
    return t;
}

template <ScalarField K>
Json trilinear_to_json(const TrilinearTensor<K>& t) {
    Json out = Json::array();
    for (std::size_t i = 0; i < t.s1().dim(); ++i)
        for (std::size_t j = 0; j < t.s2().dim(); ++j)
            for (std::size_t k = 0; k < t.s3().dim(); ++k)
                for (std::size_t l = 0; l < t.out().dim(); ++l)
                    if (!t.at(i, j, k, l).is_zero())
                        out.push_back(
                            Json::array({i, j, k, l, scalar_to_json(t.at(i, j, k, l))}));
    return out;
}

namespace iodetail {

inline std::optional<std::vector<Parity>> parity_from_json(const Json& j, std::size_t n,
                                                           const std::string& where) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(where + ": expected a list of " + std::to_string(n) +
                         " \"even\"/\"odd\" entries");
    std::vector<Parity> p;
    for (const auto& e : j) {
        if (e == "even")
            p.push_back(Parity::Even);
        else if (e == "odd")
            p.push_back(Parity::Odd);
        else
            throw ParseError(where + ": entries must be \"even\" or \"odd\"");
    }
    return p;
}

inline BasedSpace space_from_json(const Json& file, const char* labels_key, std::size_t n,
                                  const std::string& prefix, const std::string& where) {
    std::vector<std::string> labels;
    if (file.contains(labels_key)) {
        labels = string_list(file.at(labels_key), where + "." + labels_key);
        if (labels.size() != n)
            throw ParseError(where + "." + labels_key + ": expected " + std::to_string(n) +
                             " labels");
        return BasedSpace(std::move(labels));
    }
    return BasedSpace(n, prefix);
}

} // namespace iodetail

template <ScalarField K>
Fkts<K> fkts_from_json(const Json& j) {
    using namespace iodetail;
    const std::string where = "fkts";
    const Json& dims = require(j, "dims", where);
    std::size_t n = require_dim(dims, "n", where + ".dims");
    Fkts<K> u;
    u.space = space_from_json(j, "labels", n, "e", where);
    u.eps = require_sign(j, "epsilon", where);
    u.delta = require_sign(j, "delta", where);
    const Json& tensors = require(j, "tensors", where);
    u.triple = trilinear_from_json<K>(require(tensors, "triple", where + ".tensors"), u.space,
                                      u.space, u.space, u.space, where + ".tensors.triple");
    return u;
}

template <ScalarField K>
Json to_json(const Fkts<K>& u) {
    Json j;
    j["kind"] = "fkts";
    j["scalars"] = to_string(scalar_kind_of<K>());
    j["dims"] = Json{{"n", u.dim()}};
    j["epsilon"] = u.eps;
    j["delta"] = u.delta;
    j["labels"] = u.space.labels();
    j["tensors"] = Json{{"triple", trilinear_to_json(u.triple)}};
    return j;
}

template <ScalarField K>
JTernary<K> jternary_from_json(const Json& j) {
    using namespace iodetail;
    const std::string where = "jternary";
    const Json& dims = require(j, "dims", where);
    std::size_t m = require_dim(dims, "j", where + ".dims");
    std::size_t n = require_dim(dims, "t", where + ".dims");

    BasedSpace js, ts;
    if (j.contains("labels")) {
        const Json& lab = j.at("labels");
        js = BasedSpace(string_list(require(lab, "j", where + ".labels"), where + ".labels.j"));
        ts = BasedSpace(string_list(require(lab, "t", where + ".labels.t"), where + ".labels.t"));
        if (js.dim() != m || ts.dim() != n)
            throw ParseError(where + ".labels: label counts do not match dims");
    } else {
        js = BasedSpace(m, "a");
        ts = BasedSpace(n, "x");
    }

    JTernary<K> s;
    s.sign = require_sign(j, "sign", where);
    const Json& tensors = require(j, "tensors", where);
    s.j.space = js;
    s.j.product = bilinear_from_json<K>(require(tensors, "product", where + ".tensors"), js, js,
                                        js, where + ".tensors.product");
    s.j.unit = vec_from_json<K>(require(j, "unit", where), m, where + ".unit");
    s.t = ts;
    s.action = bilinear_from_json<K>(require(tensors, "action", where + ".tensors"), js, ts, ts,
                                     where + ".tensors.action");
    s.angle = bilinear_from_json<K>(require(tensors, "angle", where + ".tensors"), ts, ts, js,
                                    where + ".tensors.angle");
    s.triple = trilinear_from_json<K>(require(tensors, "triple", where + ".tensors"), ts, ts, ts,
                                      ts, where + ".tensors.triple");
    return s;
}

template <ScalarField K>
Json to_json(const JTernary<K>& s) {
    Json j;
    j["kind"] = "jternary";
    j["scalars"] = to_string(scalar_kind_of<K>());
    j["dims"] = Json{{"j", s.nj()}, {"t", s.nt()}};
    j["sign"] = s.sign;
    j["labels"] = Json{{"j", s.j.space.labels()}, {"t", s.t.labels()}};
    j["unit"] = vec_to_json(s.j.unit);
    j["tensors"] = Json{{"product", bilinear_to_json(s.j.product)},
                        {"action", bilinear_to_json(s.action)},
                        {"angle", bilinear_to_json(s.angle)},
                        {"triple", trilinear_to_json(s.triple)}};
    return j;
}

template <ScalarField K>
Dicyclic<K> dicyclic_from_json(const Json& j) {
    using namespace iodetail;
    const std::string where = "dicyclic";
    const Json& dims = require(j, "dims", where);
    std::size_t n = require_dim(dims, "n", where + ".dims");
    Dicyclic<K> a;
    a.space = space_from_json(j, "labels", n, "w", where);
    a.bar = matrix_from_json<K>(require(j, "bar", where), n, n, where + ".bar");
    const Json& tensors = require(j, "tensors", where);
    a.star = bilinear_from_json<K>(require(tensors, "star", where + ".tensors"), a.space, a.space,
                                   a.space, where + ".tensors.star");
    a.triple = trilinear_from_json<K>(require(tensors, "triple", where + ".tensors"), a.space,
                                      a.space, a.space, a.space, where + ".tensors.triple");
    return a;
}

template <ScalarField K>
Json to_json(const Dicyclic<K>& a) {
    Json j;
    j["kind"] = "dicyclic";
    j["scalars"] = to_string(scalar_kind_of<K>());
    j["dims"] = Json{{"n", a.dim()}};
    j["labels"] = a.space.labels();
    j["bar"] = matrix_to_json(a.bar);
    j["tensors"] =
        Json{{"star", bilinear_to_json(a.star)}, {"triple", trilinear_to_json(a.triple)}};
    return j;
}

template <ScalarField K>
LieAlgebra<K> lie_from_json(const Json& j) {
    using namespace iodetail;
    const std::string where = "lie";
    const Json& dims = require(j, "dims", where);
    std::size_t n = require_dim(dims, "n", where + ".dims");

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = string_list(j.at("labels"), where + ".labels");
        if (labels.size() != n) throw ParseError(where + ".labels: expected " +
                                                 std::to_string(n) + " labels");
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::optional<std::vector<Parity>> parity;
    if (j.contains("parity"))
        parity = parity_from_json(j.at("parity"), n, where + ".parity");

    LieAlgebra<K> g;
    g.space = BasedSpace(std::move(labels), std::move(parity));
    const Json& tensors = require(j, "tensors", where);
    g.bracket = bilinear_from_json<K>(require(tensors, "bracket", where + ".tensors"), g.space,
                                      g.space, g.space, where + ".tensors.bracket");
    if (j.contains("grades")) {
        g.grade_tags = string_list(j.at("grades"), where + ".grades");
        if (g.grade_tags.size() != n)
            throw ParseError(where + ".grades: expected " + std::to_string(n) + " entries");
    }
    if (j.contains("frame")) {
        const Json& fr = j.at("frame");
        g.frame = std::array<Vec<K>, 3>{
            vec_from_json<K>(require(fr, "h", where + ".frame"), n, where + ".frame.h"),
            vec_from_json<K>(require(fr, "e", where + ".frame"), n, where + ".frame.e"),
            vec_from_json<K>(require(fr, "f", where + ".frame"), n, where + ".frame.f")};
    }
    return g;
}

template <ScalarField K>
Json to_json(const LieAlgebra<K>& g) {
    Json j;
    j["kind"] = "lie";
    j["scalars"] = to_string(scalar_kind_of<K>());
    j["dims"] = Json{{"n", g.dim()}};
    j["labels"] = g.space.labels();
    if (g.space.graded()) {
        Json par = Json::array();
        for (std::size_t i = 0; i < g.dim(); ++i)
            par.push_back(g.space.parity(i) == Parity::Odd ? "odd" : "even");
        j["parity"] = std::move(par);
    }
    if (!g.grade_tags.empty()) j["grades"] = g.grade_tags;
    if (g.frame)
        j["frame"] = Json{{"h", vec_to_json((*g.frame)[0])},
                          {"e", vec_to_json((*g.frame)[1])},
                          {"f", vec_to_json((*g.frame)[2])}};
    j["tensors"] = Json{{"bracket", bilinear_to_json(g.bracket)}};
    return j;
}

/// Report serialization (implemented in report.cpp as report_to_json) plus a
/// uniform helper that picks up the file kind before dispatching.
inline AlgebraKind file_kind_or_override(const Json& j, const std::optional<std::string>& kind) {
    if (kind) return algebra_kind_from_string(*kind);
    return file_kind(j);
}

} // namespace triplekit
