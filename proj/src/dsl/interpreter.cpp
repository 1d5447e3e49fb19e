#include "frobkit/dsl/interpreter.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <ostream>

#include "frobkit/conditions.hpp"
#include "frobkit/dsl/evaluate.hpp"
#include "frobkit/dsl/gb_cache.hpp"
#include "frobkit/dsl/parser.hpp"
#include "frobkit/error.hpp"
#include "frobkit/ideal_ops.hpp"
#include "frobkit/invariants.hpp"
#include "json.hpp"

namespace frobkit::dsl {

namespace {

using json = nlohmann::ordered_json;

enum class Scope { none, origin, sampled };

json number(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json rational(const Rational& r) {
    return json{{"num", number(boost::multiprecision::numerator(r))}, {"den", number(boost::multiprecision::denominator(r))}};
}

json polys(std::span<const Polynomial> ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

json ideal_json(const RIdeal& I) { return polys(I.canonical_generators()); }

json report_json(const ConditionReport& r) {
    json out{{"verdict", to_string(r.verdict)}, {"samples_tested", r.samples_tested}, {"witness", nullptr}};
    if (r.witness) {
        const auto& w = *r.witness;
        json witness;
        if (w.ideal_pair) {
            witness["I"] = polys(w.first);
            witness["J"] = polys(w.second);
        } else {
            witness["xs"] = polys(w.first);
            witness["y"] = to_string(w.second.front());
        }
        witness["q"] = w.q;
        witness["lhs"] = polys(w.lhs);
        witness["rhs"] = polys(w.rhs);
        witness["separator"] = to_string(w.separator);
        out["witness"] = std::move(witness);
    }
    return out;
}

json hk_json(const HKSeries& s) {
    json rows = json::array();
    for (const auto& row : s.rows)
        rows.push_back({{"e", row.e}, {"q", row.q}, {"lambda", row.lambda}, {"ratio", rational(row.ratio)}});
    return {{"d", s.d}, {"rows", std::move(rows)}, {"e_hk_estimate", rational(s.e_hk_estimate)}, {"regular", s.regular_flag}};
}

json sampled_property(const ConditionReport& r, const char* method) {
    const bool falsified = r.verdict == Verdict::violated;
    return {{"answer", falsified ? "no" : "not refuted"},
            {"status", falsified ? "falsified" : "sampled"},
            {"method", method},
            {"report", report_json(r)}};
}

struct Binding {
    std::string name;
    Expr value;
    std::size_t statement;
};

class Interpreter;

/// Arguments of one command, resolved lazily against the command's ring.
class Call {
   public:
    Call(Interpreter& in, std::size_t statement, QuotientPtr ring, std::map<std::string, const Expr*> args)
        : in_(in), statement_(statement), ring_(std::move(ring)), args_(std::move(args)) {}

    const QuotientPtr& ring() const { return ring_; }
    const RingPtr& ambient() const { return ring_->ambient(); }
    bool has(const std::string& name) const { return args_.contains(name); }

    const Expr& expr(const std::string& name) const {
        auto it = args_.find(name);
        if (it == args_.end()) throw Error(ErrorCode::InvalidArgument, "missing argument '" + name + "'");
        return *it->second;
    }

    Polynomial poly(const std::string& name) const;
    RIdeal ideal(const std::string& name) const;
    RElement element(const std::string& name) const { return RElement(ring_, poly(name)); }
    std::vector<Polynomial> poly_list(const std::string& name) const;

    std::int64_t integer(const std::string& name, std::optional<std::int64_t> fallback = std::nullopt,
                         std::int64_t minimum = 0) const {
        std::int64_t value;
        if (!has(name)) {
            if (!fallback) throw Error(ErrorCode::InvalidArgument, "missing argument '" + name + "'");
            value = *fallback;
        } else {
            const auto* p = std::get_if<PolyExpr>(&expr(name).node);
            auto v = p ? p->as_integer() : std::nullopt;
            if (!v) throw Error(ErrorCode::InvalidArgument, "'" + name + "' must be an integer");
            value = *v;
        }
        if (value < minimum)
            throw Error(ErrorCode::InvalidArgument, "'" + name + "' must be at least " + std::to_string(minimum));
        return value;
    }

    std::uint64_t count(const std::string& name, std::optional<std::int64_t> fallback = std::nullopt,
                        std::int64_t minimum = 0) const {
        return static_cast<std::uint64_t>(integer(name, fallback, minimum));
    }

    std::vector<FrobeniusExponent> exponents(const std::string& name) const {
        if (!has(name)) return default_exponents(ring_->field());
        std::vector<FrobeniusExponent> out;
        auto add = [&](const Expr& e) {
            const auto* p = std::get_if<PolyExpr>(&e.node);
            auto v = p ? p->as_integer() : std::nullopt;
            if (!v || *v < 1) throw Error(ErrorCode::InvalidArgument, "'" + name + "' must list powers of p");
            out.push_back(FrobeniusExponent::from_q(ring_->field(), static_cast<std::uint64_t>(*v)));
        };
        if (const auto* list = std::get_if<ListExpr>(&expr(name).node)) {
            for (const auto& item : list->items) add(item);
            if (out.empty()) throw Error(ErrorCode::InvalidArgument, "'" + name + "' is empty");
        } else {
            add(expr(name));
        }
        return out;
    }

    std::vector<std::size_t> variable_indices(const std::string& name) const {
        std::vector<const Expr*> items;
        if (const auto* list = std::get_if<ListExpr>(&expr(name).node)) {
            for (const auto& item : list->items) items.push_back(&item);
        } else {
            items.push_back(&expr(name));
        }
        std::vector<std::size_t> out;
        for (const auto* item : items) {
            const auto* p = std::get_if<PolyExpr>(&item->node);
            auto v = p ? p->as_name() : std::nullopt;
            auto index = v ? ambient()->variable_index(*v) : std::nullopt;
            if (!index) throw Error(ErrorCode::InvalidArgument, "'" + name + "' must list variables of the ring");
            out.push_back(*index);
        }
        return out;
    }

   private:
    Interpreter& in_;
    std::size_t statement_;
    QuotientPtr ring_;
    std::map<std::string, const Expr*> args_;
};

struct CommandSpec {
    std::vector<std::string> params;
    Scope scope;
    std::function<json(const Call&, const RunOptions&)> run;
};

const std::map<std::string, CommandSpec>& commands();

class Interpreter {
   public:
    Interpreter(const RunOptions& options, std::ostream& out) : options_(options), out_(out) {}

    bool execute(const Script& script) {
        bool ok = true;
        for (std::size_t k = 0; k < script.statements.size(); ++k) {
            const auto& s = script.statements[k];
            if (const auto* let = std::get_if<Let>(&s.body)) {
                bindings_.push_back({let->name, let->value, k});
                continue;
            }
            ok = command(std::get<Command>(s.body), k) && ok;
        }
        return ok;
    }

    const Binding* find(const std::string& name, std::size_t before) const {
        for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
            if (it->statement < before && it->name == name) return &*it;
        return nullptr;
    }

    Polynomial poly(const Expr& e, std::size_t at, const RingPtr& S) const {
        const auto* p = std::get_if<PolyExpr>(&e.node);
        if (!p) throw Error(ErrorCode::InvalidArgument, print(e) + " is not a polynomial");
        return evaluate(*p, S, [this, at, &S](const std::string& name) -> std::optional<Polynomial> {
            const auto* b = find(name, at);
            if (!b) return std::nullopt;
            if (!std::holds_alternative<PolyExpr>(b->value.node))
                throw Error(ErrorCode::InvalidArgument, "'" + name + "' is not a polynomial");
            return poly(b->value, b->statement, S);
        });
    }

    RIdeal ideal(const Expr& e, std::size_t at, const QuotientPtr& R) const {
        if (const auto* I = std::get_if<IdealExpr>(&e.node)) {
            std::vector<Polynomial> gens;
            for (const auto& g : I->generators) gens.push_back(poly(Expr{g}, at, R->ambient()));
            return RIdeal(R, std::move(gens));
        }
        if (const auto* p = std::get_if<PolyExpr>(&e.node)) {
            if (auto name = p->as_name(); name && !R->ambient()->variable_index(*name)) {
                const auto* b = find(*name, at);
                if (b && std::holds_alternative<IdealExpr>(b->value.node)) return ideal(b->value, b->statement, R);
            }
            return RIdeal(R, {poly(e, at, R->ambient())});
        }
        throw Error(ErrorCode::InvalidArgument, print(e) + " is not an ideal");
    }

   private:
    /// The binding a ring-valued expression refers to, if any.
    std::optional<std::pair<const RingExpr*, std::size_t>> ring_expr(const Expr& e, std::size_t at) const {
        if (const auto* r = std::get_if<RingExpr>(&e.node)) return std::make_pair(r, at);
        if (const auto* p = std::get_if<PolyExpr>(&e.node)) {
            if (auto name = p->as_name()) {
                const auto* b = find(*name, at);
                if (b) {
                    if (const auto* r = std::get_if<RingExpr>(&b->value.node)) return std::make_pair(r, b->statement);
                }
            }
        }
        return std::nullopt;
    }

    QuotientPtr ring(const RingExpr& r, std::size_t at) {
        const auto key = std::make_pair(&r, at);
        if (auto it = rings_.find(key); it != rings_.end()) return it->second;
        auto S = PolynomialRing::make(PrimeField(r.characteristic), r.variables, options_.order);
        std::vector<Polynomial> relations;
        for (const auto& rel : r.relations) relations.push_back(poly(Expr{rel}, at, S));
        auto R = RingPresentation::present(S, std::move(relations));
        rings_.emplace(key, R);
        return R;
    }

    QuotientPtr command_ring(const Command& cmd, std::size_t at, std::vector<const Argument*>& rest) {
        std::optional<std::pair<const RingExpr*, std::size_t>> chosen;
        for (const auto& arg : cmd.args) {
            auto r = (!arg.keyword || *arg.keyword == "ring") ? ring_expr(arg.value, at) : std::nullopt;
            if (!r) {
                rest.push_back(&arg);
                continue;
            }
            if (chosen && *chosen != *r) throw Error(ErrorCode::InvalidArgument, "more than one ring in scope");
            chosen = r;
        }
        if (!chosen) {
            for (auto it = bindings_.rbegin(); it != bindings_.rend() && !chosen; ++it) {
                if (it->statement >= at) continue;
                if (const auto* r = std::get_if<RingExpr>(&it->value.node)) chosen = std::make_pair(r, it->statement);
            }
        }
        if (!chosen) throw Error(ErrorCode::InvalidArgument, "no ring in scope");
        return ring(*chosen->first, chosen->second);
    }

    bool command(const Command& cmd, std::size_t at) {
        json record{{"cmd", cmd.name}};
        try {
            const auto& table = commands();
            auto spec = table.find(cmd.name);
            if (spec == table.end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + cmd.name + "'");
            std::vector<const Argument*> rest;
            auto R = command_ring(cmd, at, rest);

            std::map<std::string, const Expr*> args;
            std::size_t next = 0;
            const auto& params = spec->second.params;
            for (const auto* arg : rest) {
                std::string name;
                if (arg->keyword) {
                    name = *arg->keyword;
                    if (std::find(params.begin(), params.end(), name) == params.end())
                        throw Error(ErrorCode::InvalidArgument, cmd.name + " has no argument '" + name + "'");
                } else {
                    while (next < params.size() && args.contains(params[next])) ++next;
                    if (next == params.size()) throw Error(ErrorCode::InvalidArgument, "too many arguments to " + cmd.name);
                    name = params[next++];
                }
                if (!args.emplace(name, &arg->value).second)
                    throw Error(ErrorCode::InvalidArgument, "argument '" + name + "' given twice");
            }

            json inputs{{"ring", R->describe()}};
            for (const auto& p : params)
                if (auto it = args.find(p); it != args.end()) inputs[p] = print(*it->second);

            const auto start = std::chrono::steady_clock::now();
            json result = spec->second.run(Call(*this, at, R, std::move(args)), options_);
            const auto elapsed = std::chrono::steady_clock::now() - start;

            record["inputs"] = std::move(inputs);
            record["result"] = std::move(result);
            record["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            if (spec->second.scope == Scope::origin) record["scope_note"] = "at the origin";
            if (spec->second.scope == Scope::sampled) record["scope_note"] = std::string(scope_note);
            emit(record);
            return true;
        } catch (const Error& e) {
            record["error"] = std::string(to_string(e.code()));
            record["detail"] = e.detail();
        } catch (const std::exception& e) {
            record["error"] = std::string(to_string(ErrorCode::InternalError));
            record["detail"] = e.what();
        }
        emit(record);
        return false;
    }

    void emit(const json& record) { out_ << (options_.pretty ? record.dump(2) : record.dump()) << "\n"; }

    const RunOptions& options_;
    std::ostream& out_;
    std::vector<Binding> bindings_;
    std::map<std::pair<const RingExpr*, std::size_t>, QuotientPtr> rings_;
};

Polynomial Call::poly(const std::string& name) const { return in_.poly(expr(name), statement_, ambient()); }

RIdeal Call::ideal(const std::string& name) const { return in_.ideal(expr(name), statement_, ring_); }

std::vector<Polynomial> Call::poly_list(const std::string& name) const {
    std::vector<Polynomial> out;
    if (const auto* list = std::get_if<ListExpr>(&expr(name).node)) {
        for (const auto& item : list->items) out.push_back(in_.poly(item, statement_, ambient()));
    } else {
        out.push_back(poly(name));
    }
    return out;
}

std::uint64_t seed_of(const Call& c, const RunOptions& o) {
    return c.has("seed") ? c.count("seed") : o.seed;
}

const std::map<std::string, CommandSpec>& commands() {
    static const std::map<std::string, CommandSpec> table = [] {
        std::map<std::string, CommandSpec> t;
        auto binary = [&](const char* name, RIdeal (*op)(const RIdeal&, const RIdeal&)) {
            t[name] = {{"I", "J"}, Scope::none, [op](const Call& c, const RunOptions&) {
                           return ideal_json(op(c.ideal("I"), c.ideal("J")));
                       }};
        };
        t["gb"] = {{"I"}, Scope::none, [](const Call& c, const RunOptions&) {
                       return polys(c.ideal("I").lift().groebner().basis());
                   }};
        t["nf"] = {{"f", "I"}, Scope::none, [](const Call& c, const RunOptions&) -> json {
                       const auto f = c.poly("f");
                       if (!c.has("I")) return to_string(c.ring()->reduce(f));
                       return to_string(normal_form(f, c.ideal("I").lift().groebner()));
                   }};
        t["member"] = {{"f", "I"}, Scope::none, [](const Call& c, const RunOptions&) -> json {
                           return c.ideal("I").contains(c.poly("f"));
                       }};
        t["equal"] = {{"I", "J"}, Scope::none, [](const Call& c, const RunOptions&) -> json {
                          return c.ideal("I") == c.ideal("J");
                      }};
        binary("sum", r_sum);
        binary("product", r_product);
        binary("intersect", r_intersect);
        binary("colon", static_cast<RIdeal (*)(const RIdeal&, const RIdeal&)>(r_colon));
        t["power"] = {{"I", "n"}, Scope::none, [](const Call& c, const RunOptions&) {
                          return ideal_json(r_power(c.ideal("I"), c.count("n")));
                      }};
        t["bracket"] = {{"I", "q"}, Scope::none, [](const Call& c, const RunOptions&) {
                            const auto qs = c.exponents("q");
                            if (qs.size() != 1) throw Error(ErrorCode::InvalidArgument, "bracket takes a single q");
                            return ideal_json(r_bracket_power(c.ideal("I"), qs.front()));
                        }};
        t["eliminate"] = {{"I", "vars"}, Scope::none, [](const Call& c, const RunOptions&) {
                              return polys(eliminate(c.ideal("I").lift(), c.variable_indices("vars")).groebner().basis());
                          }};
        t["radical"] = {{"f", "I"}, Scope::none, [](const Call& c, const RunOptions&) -> json {
                            return radical_member(c.poly("f"), c.ideal("I").lift());
                        }};
        t["dim"] = {{"I"}, Scope::none, [](const Call& c, const RunOptions&) -> json {
                        if (!c.has("I")) return krull_dim(*c.ring());
                        return krull_dim(c.ideal("I").lift().groebner());
                    }};
        t["primary"] = {{"I"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                            return is_origin_primary(c.ideal("I"));
                        }};
        t["length"] = {{"I"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                           return length(c.ideal("I"));
                       }};
        t["mu"] = {{"I"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                       const auto gens = minimal_generators(c.ideal("I"));
                       return {{"mu", gens.size()}, {"generators", polys(gens)}};
                   }};
        t["mu_series"] = {{"I", "n_max"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                              const auto r = mu_series(c.ideal("I"), c.count("n_max", 8, 4));
                              json values = json::array();
                              for (const auto& [n, mu] : r.mu_values) values.push_back({{"n", n}, {"mu", mu}});
                              json fitted = nullptr, window = nullptr, spread = nullptr;
                              if (r.fitted) {
                                  fitted = {{"degree", r.fitted->degree()}, {"coefficients", json::array()}};
                                  for (const auto& a : r.fitted->coefficients) fitted["coefficients"].push_back(rational(a));
                                  window = {r.fit_window->first, r.fit_window->second};
                                  spread = *r.spread_estimate;
                              }
                              return {{"mu_values", std::move(values)},
                                      {"fitted_poly", std::move(fitted)},
                                      {"fit_window", std::move(window)},
                                      {"spread_estimate", std::move(spread)}};
                          }};
        t["hk"] = {{"e_max"}, Scope::origin, [](const Call& c, const RunOptions&) {
                       return hk_json(hk_series(c.ring(), static_cast<unsigned>(c.count("e_max", 3, 1))));
                   }};
        t["kunz"] = {{"e"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                         return kunz_regular_test(c.ring(), static_cast<unsigned>(c.count("e", 1, 1)));
                     }};
        t["check_ci"] = {{"xs", "y", "q"}, Scope::sampled, [](const Call& c, const RunOptions&) {
                             std::vector<RElement> xs;
                             if (c.has("xs"))
                                 for (const auto& x : c.poly_list("xs")) xs.emplace_back(c.ring(), x);
                             return report_json(check_ci_instance({c.ring(), std::move(xs), c.element("y"), c.exponents("q")}));
                         }};
        t["check_pair"] = {{"I", "J", "q"}, Scope::sampled, [](const Call& c, const RunOptions&) {
                               return report_json(check_ideal_pair(c.ideal("I"), c.ideal("J"), c.exponents("q")));
                           }};
        t["search"] = {{"i", "deg", "q", "budget", "seed"}, Scope::sampled, [](const Call& c, const RunOptions& o) {
                           return report_json(search_violation(c.ring(), c.count("i", 1), static_cast<std::uint32_t>(c.count("deg", 2, 1)),
                                                               c.exponents("q"), c.count("budget", 100), seed_of(c, o)));
                       }};
        t["search_pairs"] = {{"deg", "q", "budget", "seed", "gens"}, Scope::sampled, [](const Call& c, const RunOptions& o) {
                                 return report_json(search_pair_violation(
                                     c.ring(), static_cast<std::uint32_t>(c.count("deg", 2, 1)), c.exponents("q"),
                                     c.count("budget", 50), seed_of(c, o), c.count("gens", 3, 1)));
                             }};
        t["length_formula"] = {{"I", "J", "q"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                                   const auto r = check_length_formula(c.ideal("I"), c.ideal("J"), c.exponents("q"));
                                   json rows = json::array();
                                   for (const auto& row : r.rows)
                                       rows.push_back({{"q", row.q}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"relation", to_string(row.relation)}});
                                   return {{"colength_between", r.colength_between}, {"rows", std::move(rows)}};
                               }};
        t["principal"] = {{"x", "y"}, Scope::origin, [](const Call& c, const RunOptions&) -> json {
                              const auto r = colon_principality(c.element("x"), c.element("y"));
                              return {{"is_principal", r.is_principal()},
                                      {"mu", r.mu},
                                      {"generator", r.generator ? json(to_string(*r.generator)) : json(nullptr)},
                                      {"colon", ideal_json(r.colon)}};
                          }};
        t["diagnose"] = {{"deg", "e_max", "budget", "pairs", "seed", "q"}, Scope::sampled, [](const Call& c, const RunOptions& o) -> json {
                             DiagnoseConfig config;
                             config.degree_bound = static_cast<std::uint32_t>(c.count("deg", 2, 1));
                             config.e_max = static_cast<unsigned>(c.count("e_max", 2, 1));
                             config.sample_budget = c.count("budget", 60);
                             config.pair_budget = c.count("pairs", 30);
                             config.seed = seed_of(c, o);
                             config.qs = c.exponents("q");
                             const auto d = diagnose(c.ring(), config);
                             return {{"regular", {{"answer", d.regular ? "yes" : "no"}, {"status", "decided"}, {"method", "kunz test at q = p"}}},
                                     {"hilbert_kunz", hk_json(d.hk)},
                                     {"domain", sampled_property(d.domain, "C0 search")},
                                     {"ufd", sampled_property(d.ufd, "C1 search")},
                                     {"ideal_pairs", sampled_property(d.pairs, "ideal-pair search")}};
                         }};
        return t;
    }();
    return table;
}

}  // namespace

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& [name, spec] : commands()) out.push_back(name);
    return out;
}

int run_script(std::string_view source, const RunOptions& options, std::ostream& out, std::ostream& err) {
    Script script;
    try {
        script = parse(source);
        check_names(script);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.detail() << "\n";
        return exit_syntax_error;
    }

    std::unique_ptr<DiskGbStore> store;
    if (options.workspace) {
        try {
            store = std::make_unique<DiskGbStore>(*options.workspace, err);
        } catch (const Error& e) {
            err << "warning: cache disabled: " << e.detail() << "\n";
        }
    }
    EngineScope scope(EngineSettings{options.budget, store.get()});
    Interpreter interpreter(options, out);
    return interpreter.execute(script) ? exit_ok : exit_command_error;
}

}  // namespace frobkit::dsl
