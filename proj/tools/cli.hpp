#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldnug/goldnug.hpp"

namespace goldnug::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2, resource_exceeded = 3 };

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// What a command produced, in all three formats.
struct Output {
    std::string text;
    json data;
    Table csv;
};

namespace detail {

inline std::string render_text(const Table& t, bool header = true) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    if (header) widen(t.columns);
    for (const auto& r : t.rows) widen(r);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 == row.size()) {
                s += row[i];
            } else {
                s += row[i] + std::string(width[i] - row[i].size() + 2, ' ');
            }
        }
        os << s << '\n';
    };
    if (header) line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline json rows_json(const Table& t) {
    json out = json::array();
    for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
        out.push_back(o);
    }
    return out;
}

inline Output tabular(Table t) {
    Output o;
    o.text = render_text(t);
    o.data = rows_json(t);
    o.csv = std::move(t);
    return o;
}

inline BigInt parse_nonnegative(const std::string& s, const char* what) {
    BigInt v = goldnug::detail::parse_bigint(s);
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + s);
    return v;
}

inline std::size_t parse_heap(const std::string& s) {
    BigInt v = parse_nonnegative(s, "heap");
    if (v > BigInt(std::numeric_limits<std::uint32_t>::max())) throw resource_limit("heap " + s + " is too large for the oracle");
    return v.convert_to<std::size_t>();
}

inline FibRepr::Kind parse_kind(const std::string& s) {
    if (s == "zeck" || s == "zeckendorf") return FibRepr::Kind::zeckendorf;
    if (s == "lo" || s == "least-odd") return FibRepr::Kind::least_odd;
    if (s == "even") return FibRepr::Kind::even;
    throw std::invalid_argument("unknown representation kind '" + s + "' (use zeck, lo or even)");
}

}  // namespace detail

struct Settings {
    std::string format = "text";
    std::size_t oracle_bound = NuggetOracle::default_bound;
    std::uint64_t seed = VerifyOptions{}.seed;
    std::string out_file;
};

inline Output cmd_value(const Settings& s, const std::string& heap) {
    std::size_t h = detail::parse_heap(heap);
    Universe u;
    NuggetOracle oracle(u, s.oracle_bound);
    GameId g = oracle.heap(h);
    Output o;
    o.text = to_text(u, g) + "\n";
    o.data = json{{"heap", h}, {"value", to_json(u, g)}, {"size", u.dag_size(g)}};
    o.csv = {{"heap", "value", "size"}, {{std::to_string(h), to_text(u, g), std::to_string(u.dag_size(g))}}};
    return o;
}

inline Output cmd_rcf(const Settings& s, const std::string& heap, bool from_oracle) {
    Output o;
    std::string text;
    json value;
    if (from_oracle) {
        std::size_t h = detail::parse_heap(heap);
        Universe u;
        NuggetOracle oracle(u, s.oracle_bound);
        RcfEngine rcf(u);
        GameId r = rcf.reduced_canonical_form(oracle.heap(h));
        text = to_text(u, r);
        value = to_json(u, r);
    } else {
        RcfValue r = heap_rcf<BigInt>(detail::parse_nonnegative(heap, "heap"));
        text = r.to_text();
        value = to_json(r);
    }
    o.text = text + "\n";
    o.data = json{{"heap", heap}, {"rcf", value}};
    o.csv = {{"heap", "rcf"}, {{heap, text}}};
    return o;
}

inline Output cmd_classify(const std::string& heap) {
    HeapClass c = classify<BigInt>(detail::parse_nonnegative(heap, "heap"));
    Output o;
    o.text = c.to_string() + "\n";
    o.data = to_json(c);
    o.data["heap"] = heap;
    o.csv = {{"heap", "class"}, {{heap, c.to_string()}}};
    return o;
}

inline Output cmd_number(const std::string& heap) {
    Dyadic v = xi_inverse<BigInt>(detail::parse_nonnegative(heap, "heap"));
    Output o;
    o.text = v.to_string() + " " + v.to_binary() + "\n";
    o.data = json{{"heap", heap}, {"value", to_json(v)}, {"binary", v.to_binary()}};
    o.csv = {{"heap", "value", "binary"}, {{heap, v.to_string(), v.to_binary()}}};
    return o;
}

inline Output cmd_xi(const std::string& arg) {
    Dyadic d = Dyadic::parse(arg);
    FibRepr r = xi_repr(d);
    BigInt x = r.value<BigInt>();
    Output o;
    o.text = x.str() + "\n";
    o.data = json{{"value", to_json(d)}, {"binary", d.to_binary()}, {"xi", x.str()}, {"repr", to_json(r)}};
    o.csv = {{"value", "binary", "xi", "repr"}, {{d.to_string(), d.to_binary(), x.str(), r.to_text()}}};
    return o;
}

inline Output cmd_repr(const std::string& arg, const std::string& kind) {
    BigInt x = detail::parse_nonnegative(arg, "argument");
    FibRepr r;
    switch (detail::parse_kind(kind)) {
        case FibRepr::Kind::zeckendorf: r = zeckendorf<BigInt>(x); break;
        case FibRepr::Kind::least_odd: r = least_odd<BigInt>(x); break;
        case FibRepr::Kind::even: r = even_repr<BigInt>(x); break;
    }
    Output o;
    o.text = r.to_text() + " " + r.to_digits() + "\n";
    o.data = to_json(r);
    o.data["value"] = arg;
    o.csv = {{"value", "kind", "terms", "digits"}, {{arg, to_string(r.kind), r.to_text(), r.to_digits()}}};
    return o;
}

inline Output table_sequences(std::uint64_t max) {
    using U = std::uint64_t;
    Word w = word_prefix(static_cast<std::size_t>(max + 1), true);
    Table t{{"n", "A", "B", "AB", "B2", "W"}, {}};
    for (U n = 0; n <= max; ++n) {
        t.rows.push_back({std::to_string(n), std::to_string(a_seq<U>(n)), std::to_string(b_seq<U>(n)), std::to_string(a_seq<U>(n) + b_seq<U>(n)),
                          std::to_string(b_seq<U>(b_seq<U>(n))), std::string(1, w[n])});
    }
    return detail::tabular(std::move(t));
}

inline Output table_partition(std::uint64_t max) {
    using U = std::uint64_t;
    Table t{{"set"}, {}};
    for (U i = 0; i <= max; ++i) t.columns.push_back(std::to_string(i));
    auto row = [&](std::string name, auto f) {
        std::vector<std::string> r{std::move(name)};
        for (U i = 0; i <= max; ++i) r.push_back(f(i));
        t.rows.push_back(std::move(r));
    };
    auto num = [](U x) { return std::to_string(x); };
    row("B", [&](U i) { return i ? num(b_seq<U>(i)) : std::string("-"); });
    row("AB0", [&](U i) { return num(a_seq<U>(b_seq<U>(i))); });
    row("AB0+1", [&](U i) { return num(a_seq<U>(b_seq<U>(i)) + 1); });
    row("B2+1", [&](U i) { return i ? num(b_seq<U>(b_seq<U>(i)) + 1) : std::string("-"); });
    for (int n = 1; n <= 3; ++n) row("G(" + std::to_string(n) + ")", [&](U i) { return num(g_heap<U>(i, n)); });
    return detail::tabular(std::move(t));
}

inline Output table_rcf(std::uint64_t max) {
    Table t{{"h", "rcf"}, {}};
    json data = json::array();
    for (std::uint64_t h = 1; h <= max; ++h) {
        RcfValue r = heap_rcf<BigInt>(BigInt(h));
        t.rows.push_back({std::to_string(h), r.to_text()});
        data.push_back(json{{"heap", h}, {"rcf", to_json(r)}});
    }
    Output o = detail::tabular(std::move(t));
    o.data = std::move(data);
    return o;
}

inline Output table_values(const Settings& s, std::uint64_t max) {
    Universe u;
    NuggetOracle oracle(u, s.oracle_bound);
    RcfEngine rcf(u);
    Table t{{"h", "value", "rcf", "size"}, {}};
    json data = json::array();
    for (std::uint64_t h = 1; h <= max; ++h) {
        GameId g = oracle.heap(static_cast<std::size_t>(h));
        GameId r = rcf.reduced_canonical_form(g);
        t.rows.push_back({std::to_string(h), to_text(u, g), to_text(u, r), std::to_string(u.dag_size(g))});
        data.push_back(json{{"heap", h}, {"value", to_json(u, g)}, {"rcf", to_json(u, r)}, {"size", u.dag_size(g)}});
    }
    Output o = detail::tabular(std::move(t));
    o.data = std::move(data);
    return o;
}

inline Output table_numbers(std::uint64_t max) {
    using U = std::uint64_t;
    Table t{{"heap", "value", "binary", "moves", "options", "option values"}, {}};
    for (U h = 0; h <= max; ++h) {
        if (!in_q<U>(h) && h != 1) continue;
        Dyadic v = xi_inverse<U>(h);
        std::vector<std::string> r{std::to_string(h), v.to_string(), v.to_binary(), "", "", ""};
        if (h >= 2) {
            auto [even, odd] = optimal_moves<U>(h);
            U lo = h - even, ro = h - odd;
            r[3] = std::to_string(even) + "," + std::to_string(odd);
            r[4] = std::to_string(lo) + "," + std::to_string(ro);
            r[5] = "{" + xi_inverse<U>(lo).to_string() + "|" + xi_inverse<U>(ro).to_string() + "}";
        }
        t.rows.push_back(std::move(r));
    }
    return detail::tabular(std::move(t));
}

inline Output cmd_table(const Settings& s, const std::string& kind, std::uint64_t max) {
    if (kind == "sequences") return table_sequences(max);
    if (kind == "partition") return table_partition(max);
    if (kind == "rcf") return table_rcf(max);
    if (kind == "values") return table_values(s, max);
    if (kind == "numbers") return table_numbers(max);
    throw std::invalid_argument("unknown table kind '" + kind + "'");
}

inline Output cmd_solve(const Settings& s, const std::string& text, const std::string& mover) {
    Position p = Position::parse(text);
    PositionSolver solver(s.oracle_bound);
    Outcome out = solver.outcome(p);
    std::vector<Player> movers;
    if (mover.empty()) {
        movers = {Player::left, Player::right};
    } else {
        movers = {parse_player(mover)};
    }
    Output o;
    o.text = std::string("outcome=") + to_string(out) + "\n";
    o.data = json{{"position", p.to_string()}, {"outcome", to_string(out)}, {"moves", json::object()}};
    o.csv.columns = {"position", "outcome", "mover", "move"};
    for (Player pl : movers) {
        auto m = solver.winning_move(p, pl);
        std::string desc = m ? m->to_string(p) : "none";
        o.text += std::string(to_string(pl)) + ": " + desc + "\n";
        o.data["moves"][to_string(pl)] = m ? json(desc) : json(nullptr);
        o.csv.rows.push_back({p.to_string(), to_string(out), to_string(pl), desc});
    }
    return o;
}

inline Output cmd_outcomes(const std::string& game, std::uint64_t max) {
    CsGameSpec spec = CsGameSpec::parse(game);
    std::vector<Outcome> outs = cs_outcomes(spec, static_cast<std::size_t>(max));
    Table t{{"h", "outcome"}, {}};
    for (std::size_t h = 0; h < outs.size(); ++h) t.rows.push_back({std::to_string(h), to_string(outs[h])});
    return detail::tabular(std::move(t));
}

inline Output cmd_probe(const std::string& game, std::uint64_t max) {
    CsGameSpec spec = CsGameSpec::parse(game);
    auto r = periodicity_probe(spec, static_cast<std::size_t>(max));
    Output o;
    if (r) {
        o.text = "period=" + std::to_string(r->period) + " preperiod=" + std::to_string(r->preperiod) + "\n";
        o.data = json{{"game", spec.to_string()}, {"max", max}, {"period", r->period}, {"preperiod", r->preperiod}};
        o.csv = {{"game", "max", "period", "preperiod"}, {{spec.to_string(), std::to_string(max), std::to_string(r->period), std::to_string(r->preperiod)}}};
    } else {
        o.text = "no period found <= " + std::to_string(max) + "\n";
        o.data = json{{"game", spec.to_string()}, {"max", max}, {"period", nullptr}, {"preperiod", nullptr}};
        o.csv = {{"game", "max", "period", "preperiod"}, {{spec.to_string(), std::to_string(max), "", ""}}};
    }
    return o;
}

inline Output cmd_verify(const Settings& s, const std::string& suite, std::optional<std::uint64_t> bound, bool& failed) {
    VerifyOptions opt;
    opt.bound = bound;
    opt.oracle_bound = s.oracle_bound;
    opt.seed = s.seed;
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& [name, _] : verify_suites()) names.push_back(name);
    } else if (verify_suites().count(suite)) {
        names.push_back(suite);
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    Output o;
    o.data = json::array();
    o.csv.columns = {"suite", "check", "result", "seconds", "detail"};
    std::size_t passed = 0, total = 0;
    for (const std::string& name : names) {
        for (const CheckResult& r : verify_suites().at(name)(opt)) {
            ++total;
            passed += r.passed;
            failed = failed || !r.passed;
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(3) << r.seconds;
            o.text += std::string(r.passed ? "PASS" : "FAIL") + "  " + name + ": " + r.name + " (" + secs.str() + "s)";
            if (!r.passed) o.text += "  " + r.detail;
            o.text += "\n";
            o.data.push_back(json{{"suite", name}, {"check", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
            o.csv.rows.push_back({name, r.name, r.passed ? "pass" : "fail", secs.str(), r.detail});
        }
    }
    o.text += std::to_string(passed) + "/" + std::to_string(total) + " checks passed\n";
    return o;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Game values, reduced canonical forms and Fibonacci tools for GoldenNugget", "goldnug"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--oracle-bound", s.oracle_bound, "Largest heap the canonical-form oracle may build");
    app.add_option("--seed", s.seed, "Seed for randomized checks");
    app.add_option("--out", s.out_file, "Write the output to this file");

    std::string heap, arg, kind = "zeck", position, mover, game, suite;
    std::uint64_t max = 20;
    std::optional<std::uint64_t> bound;
    bool from_oracle = false;

    auto* value = app.add_subcommand("value", "Canonical form of a heap (oracle)");
    value->add_option("heap", heap)->required();
    auto* rcf = app.add_subcommand("rcf", "Reduced canonical form of a heap");
    rcf->add_option("heap", heap)->required();
    rcf->add_flag("--from-oracle", from_oracle, "Reduce the oracle's canonical form instead of using the classifier");
    auto* cls = app.add_subcommand("classify", "Class of a heap in the partition");
    cls->add_option("heap", heap)->required();
    auto* number = app.add_subcommand("number", "Value of a number heap, with its binary expansion");
    number->add_option("heap", heap)->required();
    auto* xi_cmd = app.add_subcommand("xi", "Heap whose value is the given binary fraction");
    xi_cmd->add_option("x", arg, "e.g. 0.1011")->required();
    auto* repr = app.add_subcommand("repr", "Fibonacci representation of a nonnegative integer");
    repr->add_option("x", arg)->required();
    repr->add_option("--kind", kind, "zeck, lo or even")->check(CLI::IsMember({"zeck", "lo", "even", "zeckendorf", "least-odd"}));
    auto* table = app.add_subcommand("table", "Print a table");
    std::string table_kind = "rcf";
    table->add_option("--kind", table_kind)->check(CLI::IsMember({"values", "rcf", "partition", "numbers", "sequences"}));
    table->add_option("--max", max, "Largest heap (or index) shown");
    auto* solve = app.add_subcommand("solve", "Outcome and winning moves of a position like 3b+20b+18r");
    solve->add_option("position", position)->required();
    solve->add_option("--mover", mover, "L or R")->check(CLI::IsMember({"L", "R"}));
    auto* outcomes = app.add_subcommand("outcomes", "Single-heap outcomes of a complementary subtraction game");
    outcomes->add_option("--game", game, "golden, oddeven, beatty:sqrt2, mod:3:L=1,2, explicit:L={...}")->required();
    outcomes->add_option("--max", max);
    auto* probe = app.add_subcommand("probe-period", "Look for eventual periodicity of the outcomes");
    probe->add_option("--game", game)->required();
    probe->add_option("--max", max);
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "game-core, rcf, fibonacci, nugget, positions or all")->required();
    verify->add_option("--bound", bound, "Cap every sweep range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    bool failed = false;
    Output o;
    try {
        if (*value) {
            o = cmd_value(s, heap);
        } else if (*rcf) {
            o = cmd_rcf(s, heap, from_oracle);
        } else if (*cls) {
            o = cmd_classify(heap);
        } else if (*number) {
            o = cmd_number(heap);
        } else if (*xi_cmd) {
            o = cmd_xi(arg);
        } else if (*repr) {
            o = cmd_repr(arg, kind);
        } else if (*table) {
            o = cmd_table(s, table_kind, max);
        } else if (*solve) {
            o = cmd_solve(s, position, mover);
        } else if (*outcomes) {
            o = cmd_outcomes(game, max);
        } else if (*probe) {
            o = cmd_probe(game, max);
        } else if (*verify) {
            o = cmd_verify(s, suite, bound, failed);
        }
    } catch (const resource_limit& e) {
        err << "error: " << e.what() << '\n';
        return resource_exceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    std::string rendered = s.format == "json" ? o.data.dump(2) + "\n" : s.format == "csv" ? detail::render_csv(o.csv) : o.text;
    if (s.out_file.empty()) {
        out << rendered;
    } else {
        std::ofstream f(s.out_file);
        if (!f) {
            err << "error: cannot write " << s.out_file << '\n';
            return usage_error;
        }
        f << rendered;
    }
    return failed ? verification_failed : ok;
}

}  // namespace goldnug::cli
