/*
   Copyright 2026 The expocalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "expocalc/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "expocalc/cli/json_io.hpp"
#include "expocalc/cli/parser.hpp"
#include "expocalc/decomposition.hpp"
#include "expocalc/errors.hpp"
#include "expocalc/fourier.hpp"
#include "expocalc/lab.hpp"
#include "expocalc/structure.hpp"
#include "expocalc/translate_span.hpp"

namespace expocalc::cli {

namespace {

using Json = nlohmann::json;

constexpr int kMaxOpsExponentials = 4;
constexpr int kMaxOpsDegree = 5;

struct Inputs {
    std::string expr;
    std::string file;
    std::string group;
    std::optional<int> order;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    return Json::parse(in);
}

/// Parses the main input plus any extra expressions in one cyclotomic field.
struct Context {
    GroupSpec group;
    int order = 4;
    ExpoPoly f{GroupSpec(), 1, 4};
    std::optional<Table> table;
    std::vector<std::string> notices;

    ExpoPoly parse(const std::string& text) const { return dsl::parse(text, group, order); }
};

Context load(const Inputs& in, const std::vector<std::string>& extra = {}, bool allow_table = false) {
    if (in.expr.empty() == in.file.empty()) throw DomainError("give exactly one of --expr and --file");
    Context ctx;
    if (!in.file.empty()) {
        const Json j = read_json_file(in.file);
        if (allow_table && j.contains("values")) {
            Table t = json_io::table_from_json(j);
            ctx.group = t.group();
            ctx.table = t;
            ctx.order = t.order();
        } else {
            ctx.f = json_io::expopoly_from_json(j);
            ctx.group = ctx.f.group();
            ctx.order = ctx.f.order();
        }
        if (!in.group.empty() && !(dsl::parse_group(in.group) == ctx.group)) {
            throw StructuralError("--group " + in.group + " does not match the file's group " + ctx.group.to_string());
        }
        const auto res = dsl::resolve_order(extra, ctx.group, in.order);
        ctx.notices = res.notices;
        ctx.order = in.order ? *in.order : static_cast<int>(std::lcm<std::int64_t>(ctx.order, res.order));
        if (ctx.table) {
            ctx.table = ctx.table->promoted(ctx.order);
        } else {
            if (ctx.order % ctx.f.order() != 0) {
                throw PreconditionError("--order " + std::to_string(ctx.order) + " does not contain the file's field Q(zeta_" +
                                        std::to_string(ctx.f.order()) + ")");
            }
            ctx.f = ctx.f.promoted(ctx.order);
        }
        return ctx;
    }
    if (in.group.empty()) throw DomainError("--expr needs --group");
    ctx.group = dsl::parse_group(in.group);
    std::vector<std::string> texts{in.expr};
    texts.insert(texts.end(), extra.begin(), extra.end());
    const auto res = dsl::resolve_order(texts, ctx.group, in.order);
    ctx.order = res.order;
    ctx.notices = res.notices;
    ctx.f = ctx.parse(in.expr);
    return ctx;
}

Json function_json(const ExpoPoly& f) {
    return Json{{"group", f.group().to_string()}, {"expr", dsl::print(f)}, {"expopoly", json_io::to_json(f)}};
}

GroupElement point_arg(const std::string& text, const GroupSpec& group, const char* flag) {
    if (text.empty()) throw DomainError(std::string(flag) + " is required");
    return dsl::parse_point(text, group);
}

ExpoPoly homogeneous_part(const ExpoPoly& f, int d) {
    std::vector<ExpoTerm> terms;
    for (const auto& t : f.terms()) terms.push_back(ExpoTerm{t.exponential, t.polynomial.homogeneous_part(d)});
    return ExpoPoly(f.group(), f.vector_dim(), f.order(), std::move(terms));
}

std::vector<Cyclotomic> unit(int k, int j, int order) {
    std::vector<Cyclotomic> u(k, Cyclotomic(order));
    u[j] = Cyclotomic(order, 1);
    return u;
}

std::complex<double> parse_lambda(const std::string& text) {
    std::stringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    in >> re;
    if (!in) throw ParseError("lambda must be 're' or 're,im'", 1, 1);
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw ParseError("lambda must be 're' or 're,im'", 1, 1);
    }
    in >> std::ws;
    if (!in.eof()) throw ParseError("trailing characters in lambda", 1, 1);
    return {re, im};
}

class Checks {
   public:
    void add(const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        Json entry{{"name", name}, {"ok", ok}};
        if (!detail.empty()) entry["detail"] = detail;
        results_.push_back(entry);
        if (!ok) failures_.push_back(name + (detail.empty() ? "" : ": " + detail));
    }
    const Json& results() const { return results_; }
    const std::vector<std::string>& failures() const { return failures_; }

   private:
    Json results_ = Json::array();
    std::vector<std::string> failures_;
};

GroupElement random_element(const GroupSpec& group, std::mt19937_64& rng, int box) {
    std::uniform_int_distribution<std::int64_t> coord(-box, box);
    std::vector<std::int64_t> free(group.free_rank()), torsion(group.torsion_count());
    for (auto& v : free) v = coord(rng);
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        torsion[j] = std::uniform_int_distribution<std::int64_t>(0, group.torsion_orders()[j] - 1)(rng);
    }
    return group.element(free, torsion);
}

Json run_checks(const ExpoPoly& f, std::uint64_t seed, std::vector<std::string>& failures) {
    std::mt19937_64 rng(seed);
    const GroupSpec& group = f.group();
    Checks checks;
    checks.add("print_parse_round_trip", [&] { return dsl::parse(dsl::print(f), group, f.order()) == f; });
    checks.add("json_round_trip", [&] { return json_io::expopoly_from_json(json_io::to_json(f)) == f; });
    checks.add("translate_matches_evaluation", [&] {
        for (int t = 0; t < 10; ++t) {
            const auto g = random_element(group, rng, 5), x = random_element(group, rng, 5);
            if (f.translate(g).evaluate(x) != f.evaluate(group.add(x, g))) return false;
        }
        return true;
    });
    checks.add("translation_additive", [&] {
        for (int t = 0; t < 5; ++t) {
            const auto g = random_element(group, rng, 3), h = random_element(group, rng, 3);
            if (!(f.translate(group.add(g, h)) == f.translate(g).translate(h))) return false;
        }
        return true;
    });
    checks.add("canonical_form_unique", [&] {
        std::vector<ExpoTerm> pieces;
        std::uniform_int_distribution<int> small(-3, 3);
        for (const auto& t : f.terms()) {
            const Cyclotomic c(f.order(), Rational(small(rng), 2));
            pieces.push_back(ExpoTerm{t.exponential, t.polynomial.scaled(c)});
            pieces.push_back(ExpoTerm{t.exponential, t.polynomial.scaled(Cyclotomic(f.order(), 1) - c)});
        }
        std::shuffle(pieces.begin(), pieces.end(), rng);
        return ExpoPoly(group, f.vector_dim(), f.order(), pieces) == f;
    });
    const ClassificationReport report = classify(f);
    checks.add("classification_chain", [&] {
        const bool chain = (!report.is_polynomial || report.is_w_polynomial) &&
                           (!report.is_w_polynomial || report.is_local_polynomial) &&
                           (!report.is_generalized || report.is_polynomial);
        return chain && report.is_generalized == report.is_local_polynomial;
    });
    const TranslateSpan span = translate_span(f);
    checks.add("translate_span_closed", [&] {
        if (!span.contains(f)) return false;
        for (const auto& b : span.basis()) {
            for (const auto& g : group.generators()) {
                if (!span.contains(b.translate(g))) return false;
            }
        }
        return true;
    });
    if (report.is_generalized && !f.is_zero()) {
        checks.add("degree_below_dim", [&] { return degree(f) < static_cast<int>(span.dim()); });
        checks.add("degree_certificate", [&] {
            const auto u = degree_certificate(f);
            return degree(f.compose_functional(u)) == degree(f);
        });
    }
    checks.add("lift_unlift_round_trip", [&] {
        const ExpoPoly g = f.compose_functional(unit(f.vector_dim(), 0, f.order()));
        const Unlifted back = unlift(lift(f, g), f.vector_dim());
        return back.fs == f && back.g == g;
    });
    if (group.is_finite()) {
        checks.add("finite_synthesis", [&] { return synthesize(Table::of(f)) == f; });
    }
    failures = checks.failures();
    return checks.results();
}

class App {
   public:
    App() : app_("Exact calculus for exponential polynomials on finitely generated abelian groups", "expocalc") {
        app_.require_subcommand(1);
        app_.set_help_all_flag("--help-all", "Expand all help");

        add("eval", "Evaluate f at a point", [this](CLI::App* s) { point_option(s, "--at", "Point a,b;c"); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                const auto v = ctx.f.evaluate(point_arg(at_.empty() ? "" : at_.front(), ctx.group, "--at"));
                Json text = Json::array();
                for (const auto& c : v) text.push_back(dsl::print(c));
                return Json{{"value", json_io::values_to_json(v)}, {"text", text}};
            });
        add("translate", "Translate f by g: x -> f(x + g)", [this](CLI::App* s) { point_option(s, "--at", "Shift g"); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                return function_json(ctx.f.translate(point_arg(at_.empty() ? "" : at_.front(), ctx.group, "--at")));
            });
        add("diff", "Apply differences Delta_{h_1} ... Delta_{h_n}",
            [this](CLI::App* s) { point_option(s, "--by", "Difference step h (repeatable)"); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                if (at_.empty()) throw DomainError("--by is required");
                ExpoPoly g = ctx.f;
                for (const auto& h : at_) {
                    g = DifferenceOperator::difference(ctx.group, dsl::parse_point(h, ctx.group), ctx.order).apply(g);
                }
                return function_json(g);
            });
        add("degree", "Degree of a generalized polynomial", nullptr, [this] {
            const Context ctx = load(inputs_);
            notices_ = ctx.notices;
            return Json{{"degree", degree(ctx.f)}};
        });
        add("classify", "Classification flags and dim L_f", nullptr, [this] {
            const Context ctx = load(inputs_);
            notices_ = ctx.notices;
            return json_io::to_json(classify(ctx.f));
        });
        add("decompose", "Split f into its components p_i m_i",
            [this](CLI::App* s) {
                s->add_option("--ms", ms_, "Exponentials, e.g. \"exp[1;],exp[2;]\"")->required();
                s->add_option("--s", s_, "Bound on the sum of component degrees")->required();
                s->add_option("--method", method_, "ops or solve")->check(CLI::IsMember({"ops", "solve"}));
            },
            [this] {
                const Context ctx = load(inputs_, {ms_});
                notices_ = ctx.notices;
                const auto ms = dsl::parse_exponentials(ms_, ctx.group, ctx.order);
                std::vector<ExpoPoly> parts;
                if (method_ == "ops") {
                    if (static_cast<int>(ms.size()) > kMaxOpsExponentials || s_ > kMaxOpsDegree) {
                        throw PreconditionError("--method ops is limited to at most " +
                                                std::to_string(kMaxOpsExponentials) + " exponentials and s <= " +
                                                std::to_string(kMaxOpsDegree));
                    }
                    parts = extract_components_ops(ctx.f, ms, s_);
                } else {
                    parts = extract_components_solve(FunctionOracle::of(ctx.f), ms, s_);
                }
                Json comps = Json::array();
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    Json c = function_json(parts[i]);
                    c["exponential"] = dsl::print(ms[i]);
                    comps.push_back(c);
                }
                return Json{{"method", method_}, {"components", comps}};
            });
        add("dim", "Dimension of the translate span L_f",
            [this](CLI::App* s) { s->add_flag("--basis", flag_, "Also list a basis"); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                const TranslateSpan span = translate_span(ctx.f);
                Json out{{"dim", span.dim()}};
                if (flag_) {
                    Json basis = Json::array();
                    for (const auto& b : span.basis()) basis.push_back(dsl::print(b));
                    out["basis"] = basis;
                }
                return out;
            });
        add("spectral", "Exponential monomials m e contained in L_f", nullptr, [this] {
            const Context ctx = load(inputs_);
            notices_ = ctx.notices;
            Json out = Json::array();
            for (const auto& entry : spectral_set(ctx.f)) {
                Json vectors = Json::array();
                for (const auto& v : entry.vectors) vectors.push_back(json_io::values_to_json(v));
                out.push_back(Json{{"exponential", dsl::print(entry.exponential)}, {"vectors", vectors}});
            }
            return Json{{"spectral", out}};
        });
        add("certificate", "Functional u with deg(u o f) = deg f", nullptr, [this] {
            const Context ctx = load(inputs_);
            notices_ = ctx.notices;
            const auto u = degree_certificate(ctx.f);
            return Json{{"functional", json_io::values_to_json(u)}, {"degree", degree(ctx.f.compose_functional(u))}};
        });
        add("homog", "Homogeneous components f_0(x), ..., f_n(x)",
            [this](CLI::App* s) {
                point_option(s, "--at", "Point x");
                s->add_option("--n", n_, "Degree bound (default: deg f)");
            },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                const int n = n_ ? *n_ : std::max(degree(ctx.f), 0);
                const auto x = point_arg(at_.empty() ? "" : at_.front(), ctx.group, "--at");
                Json parts = Json::array();
                for (const auto& p : homogeneous_parts(FunctionOracle::of(ctx.f), n, x)) {
                    parts.push_back(json_io::values_to_json(p));
                }
                return Json{{"parts", parts}};
            });
        add("polarize", "Symmetric i-additive map of the degree-i part, at i points",
            [this](CLI::App* s) {
                s->add_option("--i", i_, "Degree i")->required();
                point_option(s, "--at", "Point (repeat i times)");
            },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                degree(ctx.f);
                std::vector<GroupElement> points;
                for (const auto& p : at_) points.push_back(dsl::parse_point(p, ctx.group));
                const auto v = polarize(FunctionOracle::of(homogeneous_part(ctx.f, i_)), i_, points);
                return Json{{"value", json_io::values_to_json(v)}};
            });
        add("lift", "F(t, x) = sum_j t_j f_j(x) + g(x) on Z^k x G",
            [this](CLI::App* s) { s->add_option("--g", lift_g_, "Scalar summand g (default 0)"); },
            [this] {
                const Context ctx = load(inputs_, {lift_g_});
                notices_ = ctx.notices;
                return function_json(lift(ctx.f, ctx.parse(lift_g_)));
            });
        add("unlift", "Recover (f_1..f_k, g) from F on Z^k x G",
            [this](CLI::App* s) { s->add_option("--k", k_, "Number of leading Z factors")->required(); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                const Unlifted u = unlift(ctx.f, k_);
                return Json{{"fs", function_json(u.fs)}, {"g", function_json(u.g)}};
            });
        add("synth", "Finite Fourier coefficients and synthesis", nullptr, [this] {
            const Context ctx = load(inputs_, {}, true);
            notices_ = ctx.notices;
            const Table t = ctx.table ? *ctx.table : Table::of(ctx.f);
            Json coeffs = Json::array();
            for (const auto& gamma : characters(t.group(), t.order())) {
                const auto e = fourier_coefficient(t, gamma);
                if (is_zero_vector(e)) continue;
                coeffs.push_back(Json{{"character", gamma.dual_index}, {"e", json_io::values_to_json(e)}});
            }
            const ExpoPoly s = synthesize(t);
            Json out = function_json(s);
            out["coefficients"] = coeffs;
            out["exact"] = Table::of(s) == t;
            return out;
        });
        add("conv", "Convolution f * g or mu * f on a finite group",
            [this](CLI::App* s) {
                s->add_option("--with", g_, "Scalar function g for (1/|G|) sum f(x - t) g(t)");
                s->add_option("--measure", measure_file_, "Measure JSON for sum f(x - t) mu({t})");
            },
            [this] {
                if (g_.empty() == measure_file_.empty()) throw DomainError("give exactly one of --with and --measure");
                const Context ctx = load(inputs_, g_.empty() ? std::vector<std::string>{} : std::vector{g_}, true);
                notices_ = ctx.notices;
                const Table f = ctx.table ? *ctx.table : Table::of(ctx.f);
                if (!g_.empty()) return Json{{"table", json_io::to_json(convolve(f, Table::of(ctx.parse(g_))))}};
                const Measure mu = json_io::measure_from_json(read_json_file(measure_file_));
                return Json{{"table", json_io::to_json(measure_convolve(mu, f))}};
            });
        add("lab-sweep", "Residual sweep for the sequence-space construction",
            [this](CLI::App* s) {
                s->add_option("--depth", depth_, "Truncation depth (2..8)");
                s->add_option("--window", window_, "Sampled points g_1..g_window");
                s->add_option("--translates", translates_, "Largest number of translates");
                s->add_option("--lambda", lambdas_, "Exponential base re[,im] (repeatable)")
                    ->expected(1)
                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
                s->add_option("--e", es_, "Index of the unit vector e (repeatable)")
                    ->expected(1)
                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
                s->add_option("--csv", csv_, "Also write the sweep as CSV");
            },
            [this] {
                const auto inst = lab::build_counterexample(depth_, window_);
                std::vector<lab::ResidualReport> reports;
                const auto lambdas = lambdas_.empty() ? std::vector<std::string>{"1"} : lambdas_;
                const auto es = es_.empty() ? std::vector<int>{1} : es_;
                for (const auto& l : lambdas) {
                    for (int e : es) {
                        if (e < 1 || e > depth_) throw PreconditionError("--e must lie in 1.." + std::to_string(depth_));
                        reports.push_back(lab::residual_sweep(inst, parse_lambda(l), lab::unit_vector(depth_, e), translates_));
                    }
                }
                if (!csv_.empty()) {
                    std::ofstream out(csv_);
                    if (!out) throw DomainError("cannot write '" + csv_ + "'");
                    out << lab::sweep_csv(reports);
                }
                Json out = Json::array();
                bool positive = true;
                for (const auto& r : reports) {
                    out.push_back(json_io::to_json(r));
                    positive = positive && r.all_positive();
                }
                return Json{{"reports", out}, {"all_positive", positive}};
            },
            false);
        add("fmt", "Canonical form", nullptr, [this] {
            const Context ctx = load(inputs_);
            notices_ = ctx.notices;
            Json out = function_json(ctx.f);
            out["order"] = ctx.order;
            return out;
        });
        add("check", "Run the invariant suite on f",
            [this](CLI::App* s) { s->add_option("--seed", seed_, "Seed for sampled checks"); },
            [this] {
                const Context ctx = load(inputs_);
                notices_ = ctx.notices;
                std::vector<std::string> failures;
                Json results = run_checks(ctx.f, seed_, failures);
                if (!failures.empty()) {
                    std::string msg = "invariant checks failed:";
                    for (const auto& f : failures) msg += " " + f + ";";
                    throw DomainError(msg);
                }
                return Json{{"checks", results}, {"ok", true}};
            });
    }

    CommandResult run(const std::vector<std::string>& args) {
        CommandResult result;
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
            const auto subs = app_.get_subcommands([&](const CLI::App* s) { return s->get_name() == args.front(); });
            if (subs.empty()) {
                result.exit_code = kUsage;
                result.diagnostics.push_back(Diagnostic{"unknown subcommand '" + args.front() + "'", 0, 0});
                result.usage = app_.help();
                return result;
            }
        }
        try {
            app_.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            result.ok = true;
            result.usage = app_.help();
            for (auto* sub : app_.get_subcommands()) result.usage = sub->help();
            return result;
        } catch (const CLI::CallForAllHelp&) {
            result.ok = true;
            result.usage = app_.help("", CLI::AppFormatMode::All);
            return result;
        } catch (const CLI::ParseError& e) {
            result.exit_code = kUsage;
            result.diagnostics.push_back(Diagnostic{e.what(), 0, 0});
            result.usage = app_.help();
            return result;
        }
        try {
            result.payload = action_();
            result.ok = true;
        } catch (const ParseError& e) {
            result.exit_code = kParseError;
            result.diagnostics.push_back(Diagnostic{e.what(), e.line(), e.column()});
        } catch (const Json::parse_error& e) {
            result.exit_code = kParseError;
            result.diagnostics.push_back(Diagnostic{e.what(), 1, static_cast<int>(e.byte)});
        } catch (const Json::exception& e) {
            result.exit_code = kParseError;
            result.diagnostics.push_back(Diagnostic{e.what(), 0, 0});
        } catch (const DomainError& e) {
            result.exit_code = kDomainError;
            result.diagnostics.push_back(Diagnostic{e.what(), 0, 0});
        } catch (const std::out_of_range& e) {
            result.exit_code = kDomainError;
            result.diagnostics.push_back(Diagnostic{e.what(), 0, 0});
        }
        result.notices = notices_;
        return result;
    }

   private:
    void add(const char* name, const char* description, const std::function<void(CLI::App*)>& options,
             std::function<Json()> action, bool takes_function = true) {
        CLI::App* sub = app_.add_subcommand(name, description);
        if (takes_function) {
            sub->add_option("--expr", inputs_.expr, "Expression in the DSL");
            sub->add_option("--file", inputs_.file, "JSON input file");
            sub->add_option("--group", inputs_.group, "Group literal such as Z^2xZ4");
            sub->add_option("--order", inputs_.order, "Cyclotomic order N (strict)");
        }
        if (options) options(sub);
        sub->callback([this, action] { action_ = action; });
    }

    void point_option(CLI::App* s, const char* flag, const char* description) {
        s->add_option(flag, at_, description)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    }

    CLI::App app_;
    std::function<Json()> action_;
    std::vector<std::string> notices_;
    Inputs inputs_;
    std::vector<std::string> at_;
    std::string ms_;
    int s_ = 0;
    std::string method_ = "ops";
    bool flag_ = false;
    std::optional<int> n_;
    int i_ = 1;
    std::string lift_g_ = "0";
    std::string g_;
    std::string measure_file_;
    int k_ = 1;
    int depth_ = 5;
    int window_ = 10;
    int translates_ = 6;
    std::vector<std::string> lambdas_;
    std::vector<int> es_;
    std::string csv_;
    std::uint64_t seed_ = 0;
};

}  // namespace

std::string CommandResult::stdout_text() const {
    if (ok && usage.empty()) return payload.dump() + "\n";
    if (ok) return "";
    Json diags = Json::array();
    for (const auto& d : diagnostics) diags.push_back(Json{{"message", d.message}, {"line", d.line}, {"column", d.column}});
    return Json{{"status", "error"}, {"diagnostics", diags}}.dump() + "\n";
}

CommandResult run(const std::vector<std::string>& args) {
    App app;
    return app.run(args);
}

}  // namespace expocalc::cli
