#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "triplekit/fixtures.hpp"
#include "triplekit/io.hpp"
#include "triplekit/liebuild.hpp"

using namespace triplekit;

namespace {

Json report_obj(const Report& r) { return Json::parse(report_to_json(r, false)); }

void print_report(const Report& r, bool pretty) { std::cout << report_to_json(r, pretty); }

int exit_of(const Report& r) { return r.ok() ? 0 : 1; }

/// Run f<K> for the scalar field the file declares.
template <class F>
int with_scalars(ScalarKind sk, F&& f) {
    if (sk == ScalarKind::Q) return f.template operator()<Rational>();
    return f.template operator()<Cyc>();
}

template <ScalarField K>
Vec<K> parse_coords(const std::string& text, std::size_t n, const std::string& what) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != n)
        throw ParseError(what + ": expected " + std::to_string(n) + " comma-separated scalars");
    Vec<K> v(n, K::zero());
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json<K>(Json(parts[i]), what);
    return v;
}

struct CommonOpts {
    std::string path;
    bool pretty = false;
};

int cmd_verify(const CommonOpts& o, const std::optional<std::string>& kind_override) {
    Json file = load_json_file(o.path);
    AlgebraKind kind = file_kind_or_override(file, kind_override);
    return with_scalars(file_scalar_kind(file), [&]<ScalarField K>() {
        Report r;
        switch (kind) {
            case AlgebraKind::Fkts: r = verify_fkts(fkts_from_json<K>(file)); break;
            case AlgebraKind::JTernary: r = verify_jternary(jternary_from_json<K>(file)); break;
            case AlgebraKind::Dicyclic: r = verify_dicyclic(dicyclic_from_json<K>(file)); break;
            case AlgebraKind::Lie: r = verify_lie(lie_from_json<K>(file)); break;
        }
        print_report(r, o.pretty);
        return exit_of(r);
    });
}

/// Emit the construction result: report plus either the algebra inline or the
/// path it was written to.
int finish_construct(const Report& r, const Json& algebra, const std::optional<std::string>& out,
                     bool pretty) {
    Json doc = report_obj(r);
    if (out) {
        write_text_file(*out, dump_json(algebra, true));
        doc["written"] = *out;
    } else {
        doc["algebra"] = algebra;
    }
    std::cout << dump_json(doc, pretty);
    return exit_of(r);
}

int cmd_construct(const CommonOpts& o, const std::string& target,
                  const std::optional<std::string>& unit, bool find_unit_from_basis,
                  const std::optional<std::string>& out) {
    Json file = load_json_file(o.path);
    AlgebraKind kind = file_kind(file);

    auto need = [&](AlgebraKind want) {
        if (kind != want)
            throw ParseError("target '" + target + "' needs a " + std::string(to_string(want)) +
                             " file, got " + to_string(kind));
    };

    return with_scalars(file_scalar_kind(file), [&]<ScalarField K>() {
        if (target == "g-jt") {
            need(AlgebraKind::JTernary);
            GjtBuild<K> b = build_g_jt(jternary_from_json<K>(file));
            Report r = verify_lie(b.g);
            r.fact("dim", std::to_string(b.g.dim()));
            return finish_construct(r, to_json(b.g), out, o.pretty);
        }
        if (target == "g-a") {
            need(AlgebraKind::Dicyclic);
            Dicyclic<K> a = dicyclic_from_json<K>(file);
            GaBuild<K> b = build_g_a(a);
            if (auto e = find_unit(a)) b.g.frame = ga_frame(a, b, *e);
            Report r = verify_lie(b.g);
            r.fact("dim", std::to_string(b.g.dim()));
            return finish_construct(r, to_json(b.g), out, o.pretty);
        }
        if (target == "g-u") {
            need(AlgebraKind::Fkts);
            GuBuild<K> b = build_g_u(fkts_from_json<K>(file));
            Report r = verify_lie(b.g);
            r.add(check_gu_grading(b));
            auto d = gu_grade_dims(b);
            r.fact("grade_dims", "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
                                     std::to_string(d[2]) + "," + std::to_string(d[3]) + "," +
                                     std::to_string(d[4]) + ")");
            return finish_construct(r, to_json(b.g), out, o.pretty);
        }
        if (target == "fkts-from-jt") {
            need(AlgebraKind::JTernary);
            Fkts<K> u = to_fkts(jternary_from_json<K>(file));
            return finish_construct(verify_fkts(u), to_json(u), out, o.pretty);
        }
        if (target == "jt-from-fkts") {
            need(AlgebraKind::Fkts);
            JTernary<K> s = from_special_fkts(fkts_from_json<K>(file));
            return finish_construct(verify_jternary(s), to_json(s), out, o.pretty);
        }
        if (target == "dic-from-jt") {
            need(AlgebraKind::JTernary);
            Dicyclic<K> a = from_jternary(jternary_from_json<K>(file));
            return finish_construct(verify_dicyclic(a), to_json(a), out, o.pretty);
        }
        if (target == "dic-from-fkts") {
            need(AlgebraKind::Fkts);
            Dicyclic<K> a = from_fkts_11(fkts_from_json<K>(file));
            return finish_construct(verify_dicyclic(a), to_json(a), out, o.pretty);
        }
        if (target == "jt-from-dic") {
            need(AlgebraKind::Dicyclic);
            Dicyclic<K> a = dicyclic_from_json<K>(file);
            Vec<K> e;
            if (unit) {
                e = parse_coords<K>(*unit, a.dim(), "--unit");
            } else if (find_unit_from_basis) {
                auto found = find_unit(a);
                if (!found) throw PreconditionError("no basis vector passes the unit conditions");
                e = *found;
            } else {
                throw ParseError("jt-from-dic needs --unit or --find-unit-from-basis");
            }
            JTernary<K> s = to_jternary(a, e);
            return finish_construct(verify_jternary(s), to_json(s), out, o.pretty);
        }
        throw ParseError("unknown target '" + target + "'");
    });
}

/// Identity basis map for compare_dicyclic.
std::vector<std::size_t> iota_map(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

int cmd_roundtrip(const CommonOpts& o, const std::string& cycle) {
    // All cycles run over Q(w): the Dic3 extractions need w, and rational
    // inputs embed losslessly.
    Json file = load_json_file(o.path);
    AlgebraKind kind = file_kind(file);
    Report r;

    if (cycle == "jt-fkts") {
        if (kind != AlgebraKind::JTernary) throw ParseError("cycle jt-fkts needs a jternary file");
        JTernary<Cyc> s = jternary_from_json<Cyc>(file);
        Fkts<Cyc> u = to_fkts(s);
        JTernary<Cyc> s2 = from_special_fkts(u);
        r.merge("recovered", compare_jt_via_action(s2, s));
    } else if (cycle == "jt-dic") {
        if (kind != AlgebraKind::JTernary) throw ParseError("cycle jt-dic needs a jternary file");
        JTernary<Cyc> s = jternary_from_json<Cyc>(file);
        if (s.sign != 1) throw ParseError("cycle jt-dic needs sign = 1");
        Dicyclic<Cyc> a = from_jternary(s);
        Vec<Cyc> e(a.dim(), Cyc::zero());
        for (std::size_t i = 0; i < s.nj(); ++i) e[i] = s.j.unit[i];
        r.merge("unit", check_unit(a, e));
        JTernary<Cyc> s2 = to_jternary(a, e);
        r.merge("recovered", compare_jt_via_action(s2, s));
        GjtBuild<Cyc> b = build_g_jt(s);
        Dic3Action<Cyc> act = dic3_on_gjt(b);
        r.merge("dic3", check_dic3_action(b.g, act));
        Dicyclic<Cyc> a2 = from_lie_with_dic3(b.g, act);
        r.merge("dicyclic_via_lie_matches", compare_dicyclic(a2, a, iota_map(a.dim())));
    } else if (cycle == "fkts-dic-lie") {
        if (kind != AlgebraKind::Fkts) throw ParseError("cycle fkts-dic-lie needs an fkts file");
        Fkts<Cyc> u = fkts_from_json<Cyc>(file);
        if (u.eps != 1 || u.delta != 1)
            throw ParseError("cycle fkts-dic-lie needs epsilon = delta = 1");
        Dicyclic<Cyc> a1 = from_fkts_11(u);
        GuBuild<Cyc> b = build_g_u(u);
        Dic3Action<Cyc> act = dic3_on_gu(b);
        r.merge("dic3", check_dic3_action(b.g, act));
        Dicyclic<Cyc> a2 = from_lie_with_dic3(b.g, act);
        // Extracted basis order is (columns, operator corner); the direct
        // construction lists the operator part first.
        std::vector<std::size_t> to_b;
        for (std::size_t i = 0; i < u.dim(); ++i) to_b.push_back(b.n_km + i);
        for (std::size_t p = 0; p < b.n_km; ++p) to_b.push_back(p);
        r.merge("extraction", compare_dicyclic(a2, a1, to_b));
    } else {
        throw ParseError("unknown cycle '" + cycle + "'");
    }
    print_report(r, o.pretty);
    return exit_of(r);
}

int cmd_decompose(const CommonOpts& o, const std::optional<std::string>& frame_arg) {
    Json file = load_json_file(o.path);
    if (file_kind(file) != AlgebraKind::Lie) throw ParseError("decompose needs a lie file");
    return with_scalars(file_scalar_kind(file), [&]<ScalarField K>() {
        LieAlgebra<K> g = lie_from_json<K>(file);
        std::array<Vec<K>, 3> frame;
        if (frame_arg) {
            std::vector<std::string> parts;
            std::string cur;
            for (char c : *frame_arg) {
                if (c == ';') {
                    parts.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            parts.push_back(cur);
            if (parts.size() != 3)
                throw ParseError("--frame: expected \"h;e;f\" coordinate blocks");
            for (std::size_t i = 0; i < 3; ++i)
                frame[i] = parse_coords<K>(parts[i], g.dim(), "--frame");
        } else if (g.frame) {
            frame = *g.frame;
        } else {
            throw ParseError("no frame: file has none and --frame not given");
        }
        Bc1Decomposition<K> d = bc1_decompose(g, frame);
        d.report.fact("weight_dims",
                      "(" + std::to_string(d.weight_dims[0]) + "," +
                          std::to_string(d.weight_dims[1]) + "," +
                          std::to_string(d.weight_dims[2]) + "," +
                          std::to_string(d.weight_dims[3]) + "," +
                          std::to_string(d.weight_dims[4]) + ")");
        print_report(d.report, o.pretty);
        const CheckResult* fb = d.report.find("frame_brackets");
        if (fb && fb->status != CheckStatus::Pass) return 2;
        return exit_of(d.report);
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure-constant toolkit for ternary algebras and graded Lie algebras"};
    app.require_subcommand(1);

    CommonOpts o;
    std::optional<std::string> kind_override, unit, out, frame_arg;
    std::string target, cycle, fixture_name;
    bool find_unit_from_basis = false;

    CLI::App* verify = app.add_subcommand("verify", "run the axiom suite for a file");
    verify->add_option("file", o.path)->required();
    verify->add_option("--kind", kind_override, "override the file's kind");
    verify->add_flag("--pretty", o.pretty);

    CLI::App* construct = app.add_subcommand("construct", "build a derived algebra from a file");
    construct->add_option("file", o.path)->required();
    construct->add_option("--target", target)->required();
    construct->add_option("--unit", unit, "unit coordinates for jt-from-dic");
    construct->add_flag("--find-unit-from-basis", find_unit_from_basis,
                        "scan basis vectors for a unit (jt-from-dic)");
    construct->add_option("--out", out, "write the constructed algebra here");
    construct->add_flag("--pretty", o.pretty);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "run a conversion cycle and compare");
    roundtrip->add_option("file", o.path)->required();
    roundtrip->add_option("--cycle", cycle)->required();
    roundtrip->add_flag("--pretty", o.pretty);

    CLI::App* decompose = app.add_subcommand("decompose", "sl2 isotypic decomposition");
    decompose->add_option("file", o.path)->required();
    decompose->add_option("--frame", frame_arg, "frame coordinates \"h;e;f\"");
    decompose->add_flag("--pretty", o.pretty);

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list or emit built-in inputs");
    CLI::App* fixtures_list = fixtures_cmd->add_subcommand("list", "print fixture names");
    CLI::App* fixtures_emit = fixtures_cmd->add_subcommand("emit", "print a fixture file");
    fixtures_emit->add_option("name", fixture_name)->required();
    fixtures_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(o, kind_override);
        if (*construct) return cmd_construct(o, target, unit, find_unit_from_basis, out);
        if (*roundtrip) return cmd_roundtrip(o, cycle);
        if (*decompose) return cmd_decompose(o, frame_arg);
        if (*fixtures_list) {
            for (const auto& n : fixtures::names()) std::cout << n << "\n";
            return 0;
        }
        if (*fixtures_emit) {
            std::cout << dump_json(fixtures::emit(fixture_name), true);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cout << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cout << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
