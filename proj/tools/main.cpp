// latticeiso: exact invariants and non-isomorphism certificates for the
// Euclidean distance graphs G(Z^2, sqrt r).
//
// Distances are always given by their squared value r, never as a decimal
// square root.  Exit codes: 0 success, 1 domain error (for example a radicand
// that is not a sum of two squares), 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latticeiso/arith.hpp"
#include "latticeiso/certificate_io.hpp"
#include "latticeiso/certify.hpp"
#include "latticeiso/construct.hpp"
#include "latticeiso/lattice.hpp"
#include "latticeiso/spectra.hpp"
#include "latticeiso/walks.hpp"

namespace {

using nlohmann::ordered_json;
using namespace latticeiso;
using lattice::LatticeVector;

constexpr const char* kFormatVersion = "1";

struct GlobalOptions {
    bool json = false;
    bool quiet = false;
    u64 budget = walks::SearchBudget{}.max_nodes;

    walks::SearchBudget search_budget() const { return walks::SearchBudget{budget}; }
};

// Either prints the text lines or wraps the result payload in the JSON
// envelope; both carry the same numeric values.
void emit(const GlobalOptions& opts, const std::string& command, const ordered_json& inputs,
          const ordered_json& result, const std::function<void()>& print_text) {
    if (opts.json) {
        ordered_json envelope;
        envelope["format_version"] = kFormatVersion;
        envelope["command"] = command;
        envelope["inputs"] = inputs;
        envelope["result"] = result;
        std::cout << envelope.dump(2) << "\n";
    } else {
        print_text();
    }
}

void note(const GlobalOptions& opts, const std::string& message) {
    if (!opts.quiet) std::cerr << message << "\n";
}

ordered_json json_point(LatticeVector v) { return ordered_json::array({v.x, v.y}); }

// Walk counts can exceed 64 bits; emit a JSON number when exact, otherwise a
// decimal string.
ordered_json json_count(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<i64>(n.get_si());
    return n.get_str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

spectra::RationalCosine parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return {std::stoll(text), 1};
        }
        return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("cosine", "expected an integer or NUM/DEN fraction: " + text);
    }
}

construct::AxisDirection parse_direction(const std::string& text) {
    if (text == "+y") return construct::AxisDirection::PlusY;
    if (text == "-y") return construct::AxisDirection::MinusY;
    if (text == "+x") return construct::AxisDirection::PlusX;
    if (text == "-x") return construct::AxisDirection::MinusX;
    throw CLI::ValidationError("direction", "expected one of +x, -x, +y, -y: " + text);
}

std::string fraction_text(spectra::RationalCosine c) {
    return std::to_string(c.num) + "/" + std::to_string(c.den);
}

ordered_json witness_json(const spectra::AngleWitness& w) {
    ordered_json j;
    j["r1"] = w.r1;
    j["r2"] = w.r2;
    j["a"] = w.a;
    j["b"] = w.b;
    j["cosine"] = ordered_json{{"num", w.cosine.num}, {"den", w.cosine.den}};
    j["p"] = w.p;
    j["n"] = w.n;
    return j;
}

void print_witness_text(const spectra::AngleWitness& w) {
    std::cout << "a " << w.a << "\n"
              << "b " << w.b << "\n"
              << "cosine " << fraction_text(w.cosine) << "\n"
              << "p " << w.p << "\n"
              << "n " << w.n << "\n";
}

ordered_json path_witness_json(const construct::PathWitness& w) {
    ordered_json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "path-witness";
    j["r"] = w.r;
    j["start"] = json_point(w.start);
    ordered_json steps = ordered_json::array();
    for (const LatticeVector s : w.steps) steps.push_back(json_point(s));
    j["steps"] = std::move(steps);
    j["end"] = json_point(w.end());
    j["length"] = w.length();
    return j;
}

// Line-oriented form: "path <r> <x0> <y0> <nsteps>" then one step per line.
void print_path_witness_text(const construct::PathWitness& w) {
    std::cout << "path " << w.r << " " << w.start.x << " " << w.start.y << " " << w.length() << "\n";
    for (const LatticeVector s : w.steps) std::cout << s.x << " " << s.y << "\n";
}

ordered_json certificate_result_json(const certify::Certificate& c) {
    return ordered_json::parse(certify::certificate_to_json(c));
}

void print_certificate_text(const certify::Certificate& c) {
    std::cout << "r1 " << c.r1 << "\n"
              << "r2 " << c.r2 << "\n";
    if (const auto* cc = std::get_if<certify::ComponentCountCertificate>(&c.kind)) {
        std::cout << "kind component-count\n"
                  << "k1 " << cc->k1 << "\n"
                  << "k2 " << cc->k2 << "\n";
    } else {
        const auto& as = std::get<certify::AngleSpectrumCertificate>(c.kind);
        std::cout << "kind angle-spectrum\n"
                  << "core1 " << as.core1 << "\n"
                  << "core2 " << as.core2 << "\n";
        print_witness_text(as.witness);
    }
}

struct WindowGraph {
    std::vector<LatticeVector> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

WindowGraph window_graph(i64 r, i64 n) {
    WindowGraph g;
    const i64 side = 2 * n + 1;
    g.vertices.reserve(static_cast<std::size_t>(side) * side);
    for (i64 x = -n; x <= n; ++x) {
        for (i64 y = -n; y <= n; ++y) g.vertices.push_back({x, y});
    }
    const auto index_of = [&](LatticeVector v) -> std::size_t {
        return static_cast<std::size_t>((v.x + n) * side + (v.y + n));
    };
    const lattice::NeighborSet nbrs = lattice::neighbor_vectors(r);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const LatticeVector s : nbrs.vectors) {
            const LatticeVector w = g.vertices[i] + s;
            if (w.x < -n || w.x > n || w.y < -n || w.y > n) continue;
            const std::size_t j = index_of(w);
            if (i < j) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

std::string dot_label(LatticeVector v) {
    return std::to_string(v.x) + "," + std::to_string(v.y);
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants and non-isomorphism certificates for distance graphs on Z^2"};
    app.require_subcommand(1);
    app.get_formatter()->column_width(26);

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "emit a JSON envelope instead of text");
    app.add_flag("--quiet", opts.quiet, "suppress diagnostics on stderr");
    app.add_option("--budget", opts.budget, "node budget for exact searches")
        ->check(CLI::PositiveNumber);

    std::function<void()> action;

    // ---- reps ----
    {
        auto* cmd = app.add_subcommand("reps", "all representations r = a^2 + b^2 with a >= b >= 0");
        auto r = std::make_shared<i64>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r] {
            action = [&opts, r] {
                const auto reps = arith::all_representations(to_integer(*r));
                ordered_json list = ordered_json::array();
                for (const auto& rep : reps) {
                    list.push_back(ordered_json{{"a", to_i64(rep.a)},
                                                {"b", to_i64(rep.b)},
                                                {"primitive", rep.primitive}});
                }
                emit(opts, "reps", {{"r", *r}}, {{"r", *r}, {"representations", list}}, [&] {
                    for (const auto& rep : reps) {
                        std::cout << rep.a.get_str() << " " << rep.b.get_str() << " "
                                  << (rep.primitive ? "primitive" : "imprimitive") << "\n";
                    }
                });
            };
        });
    }

    // ---- realized ----
    {
        auto* cmd = app.add_subcommand("realized", "is r a sum of two integer squares");
        auto r = std::make_shared<i64>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r] {
            action = [&opts, r] {
                const bool realized = arith::is_realized(to_integer(*r));
                emit(opts, "realized", {{"r", *r}}, {{"r", *r}, {"realized", realized}},
                     [&] { std::cout << bool_text(realized) << "\n"; });
            };
        });
    }

    // ---- core ----
    {
        auto* cmd = app.add_subcommand("core", "core decomposition r = core * 2^gamma * prod q^(2 beta)");
        auto r = std::make_shared<i64>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r] {
            action = [&opts, r] {
                const auto dec = arith::core_decompose(to_integer(*r));
                const Integer h = arith::mandatory_gcd_divisor(to_integer(*r));
                ordered_json q = ordered_json::array();
                for (const auto& [prime, beta] : dec.q_part) {
                    q.push_back(ordered_json::array({to_i64(prime), beta}));
                }
                emit(opts, "core", {{"r", *r}},
                     {{"r", *r},
                      {"core", to_i64(dec.core)},
                      {"gamma", dec.gamma},
                      {"q", q},
                      {"h", to_i64(h)}},
                     [&] {
                         std::cout << "core " << dec.core.get_str() << "\n"
                                   << "gamma " << dec.gamma << "\n";
                         for (const auto& [prime, beta] : dec.q_part) {
                             std::cout << "q " << prime.get_str() << " " << beta << "\n";
                         }
                         std::cout << "h " << h.get_str() << "\n";
                     });
            };
        });
    }

    // ---- components ----
    {
        auto* cmd = app.add_subcommand("components", "number of components of G(Z^2, sqrt r)");
        auto r = std::make_shared<i64>();
        auto same = std::make_shared<std::vector<i64>>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--same", *same, "check whether two points share a component: UX UY VX VY")
            ->expected(4);
        cmd->callback([&opts, &action, r, same] {
            action = [&opts, r, same] {
                if (!same->empty()) {
                    const LatticeVector u{(*same)[0], (*same)[1]};
                    const LatticeVector v{(*same)[2], (*same)[3]};
                    const bool result = lattice::same_component(*r, u, v);
                    emit(opts, "components",
                         {{"r", *r}, {"u", json_point(u)}, {"v", json_point(v)}},
                         {{"r", *r}, {"u", json_point(u)}, {"v", json_point(v)}, {"same_component", result}},
                         [&] { std::cout << bool_text(result) << "\n"; });
                    return;
                }
                const i64 count = lattice::component_count(*r);
                emit(opts, "components", {{"r", *r}}, {{"r", *r}, {"components", count}},
                     [&] { std::cout << count << "\n"; });
            };
        });
    }

    // ---- spectrum ----
    {
        auto* cmd = app.add_subcommand("spectrum", "exact dot products and cosines between neighbor vectors");
        auto r = std::make_shared<i64>();
        auto contains = std::make_shared<std::string>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--contains", *contains, "test whether a cosine NUM/DEN is realized at r");
        cmd->callback([&opts, &action, r, contains] {
            action = [&opts, r, contains] {
                if (!contains->empty()) {
                    const auto c = parse_fraction(*contains);
                    const bool realized = spectra::is_angle_realized(c, *r);
                    emit(opts, "spectrum",
                         {{"r", *r}, {"cosine", ordered_json{{"num", c.num}, {"den", c.den}}}},
                         {{"r", *r},
                          {"cosine", ordered_json{{"num", c.num}, {"den", c.den}}},
                          {"realized", realized}},
                         [&] { std::cout << bool_text(realized) << "\n"; });
                    return;
                }
                const auto dots = spectra::dot_spectrum(*r);
                const auto cosines = spectra::cosine_spectrum(*r);
                ordered_json jd = ordered_json::array();
                for (const i64 d : dots) jd.push_back(d);
                ordered_json jc = ordered_json::array();
                for (const auto& c : cosines) jc.push_back(ordered_json{{"num", c.num}, {"den", c.den}});
                emit(opts, "spectrum", {{"r", *r}}, {{"r", *r}, {"dots", jd}, {"cosines", jc}}, [&] {
                    for (std::size_t i = 0; i < dots.size(); ++i) {
                        std::cout << dots[i] << " " << fraction_text(cosines[i]) << "\n";
                    }
                });
            };
        });
    }

    // ---- witness ----
    {
        auto* cmd = app.add_subcommand("witness", "angle realized at r1 but not at r2 (both core, r1 > r2)");
        auto r1 = std::make_shared<i64>();
        auto r2 = std::make_shared<i64>();
        cmd->add_option("R1", *r1, "larger core radicand")->required()->check(CLI::PositiveNumber);
        cmd->add_option("R2", *r2, "smaller core radicand")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r1, r2] {
            action = [&opts, r1, r2] {
                const auto w = spectra::angle_witness(*r1, *r2);
                emit(opts, "witness", {{"r1", *r1}, {"r2", *r2}}, witness_json(w),
                     [&] { print_witness_text(w); });
            };
        });
    }

    // ---- unit-translation ----
    {
        auto* cmd = app.add_subcommand("unit-translation",
                                       "vectors of squared norm r summing to a unit vector");
        auto r = std::make_shared<i64>();
        auto dir = std::make_shared<std::string>("+y");
        cmd->add_option("R", *r, "core radicand")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--direction", *dir, "+x, -x, +y or -y (default +y)");
        cmd->callback([&opts, &action, r, dir] {
            action = [&opts, r, dir] {
                const auto direction = parse_direction(*dir);
                const auto vectors = construct::axis_translation(*r, direction);
                LatticeVector sum{0, 0};
                for (const LatticeVector v : vectors) sum = sum + v;
                ordered_json jv = ordered_json::array();
                for (const LatticeVector v : vectors) jv.push_back(json_point(v));
                emit(opts, "unit-translation", {{"r", *r}, {"direction", *dir}},
                     {{"r", *r},
                      {"direction", *dir},
                      {"count", vectors.size()},
                      {"sum", json_point(sum)},
                      {"vectors", jv}},
                     [&] {
                         for (const LatticeVector v : vectors) std::cout << v.x << " " << v.y << "\n";
                     });
                note(opts, std::to_string(vectors.size()) + " vectors summing to (" +
                               std::to_string(sum.x) + ", " + std::to_string(sum.y) + ")");
            };
        });
    }

    // ---- path ----
    {
        auto* cmd = app.add_subcommand("path", "walk from (X0,Y0) to (X1,Y1) with steps of squared norm r");
        auto r = std::make_shared<i64>();
        auto c = std::make_shared<std::vector<i64>>();
        auto erase = std::make_shared<bool>(false);
        cmd->add_option("R", *r, "core radicand")->required()->check(CLI::PositiveNumber);
        cmd->add_option("COORDS", *c, "X0 Y0 X1 Y1")->required()->expected(4);
        cmd->add_flag("--loop-erase", *erase, "erase revisits, yielding a vertex-distinct path");
        cmd->callback([&opts, &action, r, c, erase] {
            action = [&opts, r, c, erase] {
                const LatticeVector u{(*c)[0], (*c)[1]};
                const LatticeVector v{(*c)[2], (*c)[3]};
                construct::PathWitness w = construct::build_path(*r, u, v);
                if (*erase) w = construct::loop_erase(w);
                emit(opts, "path",
                     {{"r", *r}, {"u", json_point(u)}, {"v", json_point(v)}, {"loop_erase", *erase}},
                     path_witness_json(w), [&] { print_path_witness_text(w); });
            };
        });
    }

    // ---- count-paths ----
    {
        auto* cmd = app.add_subcommand("count-paths",
                                       "exact number of vertex-distinct paths of length L");
        auto r = std::make_shared<i64>();
        auto l = std::make_shared<unsigned>();
        auto c = std::make_shared<std::vector<i64>>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("L", *l, "path length in edges")->required();
        cmd->add_option("COORDS", *c, "X0 Y0 X1 Y1")->required()->expected(4);
        cmd->callback([&opts, &action, r, l, c] {
            action = [&opts, r, l, c] {
                const walks::PathCountQuery query{*r, *l, {(*c)[0], (*c)[1]}, {(*c)[2], (*c)[3]}};
                const u64 count = walks::count_paths(query, opts.search_budget());
                emit(opts, "count-paths",
                     {{"r", *r}, {"length", *l}, {"u", json_point(query.u)}, {"v", json_point(query.v)}},
                     {{"r", *r},
                      {"length", *l},
                      {"u", json_point(query.u)},
                      {"v", json_point(query.v)},
                      {"count", count}},
                     [&] { std::cout << count << "\n"; });
            };
        });
    }

    // ---- walks ----
    {
        auto* cmd = app.add_subcommand("walks", "exact number of walks of length L from the origin");
        auto r = std::make_shared<i64>();
        auto l = std::make_shared<unsigned>();
        auto x = std::make_shared<i64>(0);
        auto y = std::make_shared<i64>(0);
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("L", *l, "walk length in steps")->required();
        auto* xopt = cmd->add_option("X", *x, "target x (default 0)");
        auto* yopt = cmd->add_option("Y", *y, "target y (default 0)");
        xopt->needs(yopt);
        yopt->needs(xopt);
        cmd->callback([&opts, &action, r, l, x, y] {
            action = [&opts, r, l, x, y] {
                const LatticeVector v{*x, *y};
                const Integer count = walks::count_walks(*r, *l, {0, 0}, v, opts.search_budget());
                emit(opts, "walks",
                     {{"r", *r}, {"length", *l}, {"u", json_point({0, 0})}, {"v", json_point(v)}},
                     {{"r", *r},
                      {"length", *l},
                      {"u", json_point({0, 0})},
                      {"v", json_point(v)},
                      {"count", json_count(count)}},
                     [&] { std::cout << count.get_str() << "\n"; });
            };
        });
    }

    // ---- collinear ----
    {
        auto* cmd = app.add_subcommand("collinear",
                                       "is the straight run to n*p the unique path of length n");
        auto r = std::make_shared<i64>();
        auto px = std::make_shared<i64>();
        auto py = std::make_shared<i64>();
        auto n = std::make_shared<unsigned>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("PX", *px, "p x-coordinate")->required();
        cmd->add_option("PY", *py, "p y-coordinate")->required();
        cmd->add_option("N", *n, "number of steps")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r, px, py, n] {
            action = [&opts, r, px, py, n] {
                const LatticeVector p{*px, *py};
                const bool unique = walks::verify_collinear_uniqueness(*r, p, *n, opts.search_budget());
                emit(opts, "collinear",
                     {{"r", *r}, {"p", json_point(p)}, {"n", *n}},
                     {{"r", *r}, {"p", json_point(p)}, {"n", *n}, {"unique", unique}},
                     [&] { std::cout << bool_text(unique) << "\n"; });
            };
        });
    }

    // ---- certify ----
    {
        auto* cmd = app.add_subcommand("certify", "non-isomorphism certificate for G_r1 and G_r2");
        auto r1 = std::make_shared<i64>();
        auto r2 = std::make_shared<i64>();
        cmd->add_option("R1", *r1, "first squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("R2", *r2, "second squared distance")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r1, r2] {
            action = [&opts, r1, r2] {
                const auto cert = certify::certify_nonisomorphic(*r1, *r2);
                emit(opts, "certify", {{"r1", *r1}, {"r2", *r2}}, certificate_result_json(cert),
                     [&] { print_certificate_text(cert); });
            };
        });
    }

    // ---- verify-cert ----
    {
        auto* cmd = app.add_subcommand("verify-cert", "re-check a certificate file from scratch");
        auto file = std::make_shared<std::string>();
        cmd->add_option("FILE", *file, "JSON certificate (bare or CLI envelope)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->callback([&opts, &action, file] {
            action = [&opts, file] {
                std::ifstream in(*file);
                if (!in) throw std::invalid_argument("cannot open " + *file);
                std::stringstream buffer;
                buffer << in.rdbuf();
                const auto cert = certify::try_certificate_from_json(buffer.str());
                bool valid = false;
                if (cert) {
                    valid = certify::verify_certificate(*cert);
                } else {
                    note(opts, *file + ": not a parsable certificate");
                }
                emit(opts, "verify-cert", {{"file", *file}}, {{"file", *file}, {"valid", valid}},
                     [&] { std::cout << bool_text(valid) << "\n"; });
            };
        });
    }

    // ---- window ----
    {
        auto* cmd = app.add_subcommand("window",
                                       "induced subgraph on [-N,N]^2 as DOT (default) or JSON");
        auto r = std::make_shared<i64>();
        auto n = std::make_shared<i64>();
        cmd->add_option("R", *r, "squared distance")->required()->check(CLI::PositiveNumber);
        cmd->add_option("N", *n, "window half-width")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opts, &action, r, n] {
            action = [&opts, r, n] {
                const WindowGraph g = window_graph(*r, *n);
                ordered_json jv = ordered_json::array();
                for (const LatticeVector v : g.vertices) jv.push_back(json_point(v));
                ordered_json je = ordered_json::array();
                for (const auto& [i, j] : g.edges) je.push_back(ordered_json::array({i, j}));
                emit(opts, "window", {{"r", *r}, {"n", *n}},
                     {{"r", *r}, {"n", *n}, {"vertices", jv}, {"edges", je}}, [&] {
                         std::cout << "graph G {\n";
                         for (const LatticeVector v : g.vertices) {
                             std::cout << "  \"" << dot_label(v) << "\";\n";
                         }
                         for (const auto& [i, j] : g.edges) {
                             std::cout << "  \"" << dot_label(g.vertices[i]) << "\" -- \""
                                       << dot_label(g.vertices[j]) << "\";\n";
                         }
                         std::cout << "}\n";
                     });
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
