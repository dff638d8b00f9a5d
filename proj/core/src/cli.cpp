#include "joinortho/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "joinortho/classifier.hpp"
#include "joinortho/json_io.hpp"
#include "joinortho/parallel.hpp"

namespace joinortho::cli {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

// tuple fields carry commas, so they are always quoted
std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

constexpr const char* kCsvHeader = "k,l,m,n,weak,strong,ajo,rule,sjo";

void emit_csv_row(std::ostream& out, const Verdict& v) {
    int k = std::min(v.m.size(), v.n.size());
    int l = std::max(v.m.size(), v.n.size());
    out << k << ',' << l << ',' << csv_quote(format_tuple(v.m)) << ','
        << csv_quote(format_tuple(v.n)) << ',' << bool_str(v.report.weakly) << ','
        << bool_str(v.report.strongly) << ',' << to_string(v.ajo) << ',' << to_string(v.rule)
        << ',' << bool_str(v.sjo) << '\n';
}

void emit_text_line(std::ostream& out, const Verdict& v) {
    out << "m=" << format_tuple(v.m) << " n=" << format_tuple(v.n) << " ajo=" << to_string(v.ajo)
        << " rule=" << to_string(v.rule) << " sjo=" << bool_str(v.sjo)
        << " weak=" << bool_str(v.report.weakly) << " strong=" << bool_str(v.report.strongly)
        << '\n';
}

int exit_for(AjoStatus s) {
    switch (s) {
    case AjoStatus::Yes: return kExitYes;
    case AjoStatus::No: return kExitNo;
    case AjoStatus::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

/* Classifies every pair on the requested workers, storing results by index
 * so the emission order never depends on scheduling.  A worker exception is
 * replayed on the calling thread. */
std::vector<Verdict> classify_all(const std::vector<std::pair<IntTuple, IntTuple>>& pairs,
                                  std::uint64_t budget, int jobs) {
    std::vector<Verdict> results(pairs.size());
    std::vector<std::string> errors(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        try {
            results[i] = classify(pairs[i].first, pairs[i].second, budget);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) throw std::logic_error(e);
    return results;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.m || !cfg.n) {
        err << "classify needs both --m and --n\n";
        return kExitUsage;
    }
    Verdict v = classify(*cfg.m, *cfg.n, cfg.budget);
    switch (cfg.format) {
    case OutputFormat::Json:
        out << verdict_to_json(v).dump() << '\n';
        break;
    case OutputFormat::Csv:
        out << kCsvHeader << '\n';
        emit_csv_row(out, v);
        break;
    case OutputFormat::Text:
        emit_text_line(out, v);
        if (v.report.delta)
            out << "psi=" << v.report.psi << " delta=" << format_tuple(*v.report.delta)
                << " eps=" << format_tuple(*v.report.eps)
                << " swapped=" << bool_str(v.report.swapped) << '\n';
        break;
    }
    return exit_for(v.ajo);
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.m || !cfg.n) {
        err << "witness needs both --m and --n\n";
        return kExitUsage;
    }
    if (cfg.format == OutputFormat::Csv) {
        err << "witness output has no csv form; use text or json\n";
        return kExitUsage;
    }
    Verdict v = classify(*cfg.m, *cfg.n, cfg.budget);
    if (v.ajo == AjoStatus::Unknown) {
        err << "inconclusive: search budget exhausted before a decision\n";
        return kExitUnknown;
    }
    if (v.ajo == AjoStatus::No) {
        err << "the pair is not always join-orthogonalisable (rule=" << to_string(v.rule)
            << ")\n";
        return kExitNo;
    }
    const WitnessPair& wp = *v.witness;
    if (cfg.format == OutputFormat::Json) {
        out << witness_to_json(wp).dump() << '\n';
        return kExitYes;
    }
    out << "mode=" << (wp.mode == WitnessMode::D ? "D" : "DTILDE")
        << " r=" << format_tuple(wp.shared_r) << " m=" << format_tuple(wp.m)
        << " n=" << format_tuple(wp.n) << '\n';
    out << "V:\n" << to_bit_lines(wp.V) << '\n';
    out << "W:\n" << to_bit_lines(wp.W) << '\n';
    return kExitYes;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    auto pairs = sorted_pairs(cfg.bounds);
    auto results = classify_all(pairs, cfg.budget, cfg.jobs);
    if (cfg.format == OutputFormat::Csv) out << kCsvHeader << '\n';
    for (const Verdict& v : results) {
        switch (cfg.format) {
        case OutputFormat::Json: out << verdict_to_json(v).dump() << '\n'; break;
        case OutputFormat::Csv: emit_csv_row(out, v); break;
        case OutputFormat::Text: emit_text_line(out, v); break;
        }
    }
    return kExitYes;
}

struct ChainResult {
    std::vector<std::string> violations;
    bool undecided = false;
    std::string error;
};

/* One pair's worth of cross-checks: the implication ladder, the closed
 * forms against the definitional search, and the two special-case
 * equivalences.  Oracle-dependent checks are skipped (and flagged) when the
 * budget runs out. */
ChainResult check_pair(const IntTuple& m, const IntTuple& n, std::uint64_t budget) {
    ChainResult res;
    auto flag = [&](const char* name) { res.violations.push_back(name); };
    try {
        int k = m.size(), l = n.size();
        SuitabilityReport rep = strongly_suitable(m, n);
        SuitabilityReport def_weak = suitable_by_definition(m, n, false);
        SuitabilityReport def_strong = suitable_by_definition(m, n, true);
        bool sjo = sometimes_jo(m, n);
        bool necessary = ajo_necessary_condition(m, n);

        if (rep.weakly != def_weak.weakly) flag("weak_closed_form_vs_definition");
        if (rep.strongly != def_strong.strongly) flag("strong_closed_form_vs_definition");
        if (strong_suitability_closed_form(m, n) != rep.strongly)
            flag("strong_inequality_vs_greedy");
        if (rep.weakly && !sjo) flag("weak_implies_sjo");
        if (rep.strongly) {
            auto wp = dtilde_constructive(m, n);
            if (!wp || !validate_witness(*wp)) flag("construction_invalid");
        }

        OracleOutcome oc = d_exact(m, n, budget);
        if (oc.status == OracleStatus::BudgetExceeded) {
            res.undecided = true;
            return res;
        }
        bool member = oc.status == OracleStatus::Member;
        if (member && !validate_witness(*oc.witness)) flag("oracle_witness_invalid");
        if (rep.strongly && !member) flag("strong_implies_member");
        if (member && !rep.weakly) flag("member_implies_weak");
        if (member && !necessary) flag("member_implies_necessary");
        if ((l % k == 0 || (l + 1) % k == 0) && rep.weakly != member)
            flag("divisibility_equivalence");
        if (k == 3 && l == 4 && case34_condition(m, n) != member) flag("length34_equivalence");
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    return res;
}

int cmd_verify_chain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto pairs = sorted_pairs(cfg.bounds);
    std::vector<ChainResult> results(pairs.size());
    parallel_for(pairs.size(), cfg.jobs, [&](std::size_t i) {
        results[i] = check_pair(pairs[i].first, pairs[i].second, cfg.budget);
    });

    std::size_t violations = 0, undecided = 0;
    if (cfg.format == OutputFormat::Csv) out << "check,k,l,m,n\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [m, n] = pairs[i];
        if (!results[i].error.empty()) throw std::logic_error(results[i].error);
        if (results[i].undecided) ++undecided;
        for (const std::string& name : results[i].violations) {
            ++violations;
            switch (cfg.format) {
            case OutputFormat::Json:
                out << ordered_json{{"check", name},
                                    {"m", tuple_to_json(m)},
                                    {"n", tuple_to_json(n)}}
                           .dump()
                    << '\n';
                break;
            case OutputFormat::Csv:
                out << name << ',' << m.size() << ',' << n.size() << ','
                    << csv_quote(format_tuple(m)) << ',' << csv_quote(format_tuple(n)) << '\n';
                break;
            case OutputFormat::Text:
                out << "violation check=" << name << " m=" << format_tuple(m)
                    << " n=" << format_tuple(n) << '\n';
                break;
            }
        }
    }
    std::ostringstream summary;
    summary << "pairs=" << pairs.size() << " violations=" << violations
            << " undecided=" << undecided;
    if (cfg.format == OutputFormat::Json)
        out << ordered_json{{"pairs", pairs.size()},
                            {"violations", violations},
                            {"undecided", undecided}}
                   .dump()
            << '\n';
    else if (cfg.format == OutputFormat::Text)
        out << summary.str() << '\n';
    else
        err << summary.str() << '\n';
    return violations == 0 ? kExitYes : kExitNo;
}

struct GapResult {
    int cls = -1;  // 0: necessary-but-not-member, 1: member-but-not-strong, 2: undecided
    std::string error;
};

int cmd_gap_hunt(const RunConfig& cfg, std::ostream& out) {
    auto pairs = sorted_pairs(cfg.bounds);
    std::vector<GapResult> results(pairs.size());
    parallel_for(pairs.size(), cfg.jobs, [&](std::size_t i) {
        const auto& [m, n] = pairs[i];
        try {
            bool necessary = ajo_necessary_condition(m, n);
            bool strong = strongly_suitable(m, n).strongly;
            if (!necessary && strong)
                throw std::logic_error("sufficient condition without the necessary one on " +
                                       format_tuple(m) + " vs " + format_tuple(n));
            OracleOutcome oc = d_exact(m, n, cfg.budget);
            if (oc.status == OracleStatus::BudgetExceeded)
                results[i].cls = 2;
            else if (oc.status == OracleStatus::NonMember && necessary)
                results[i].cls = 0;
            else if (oc.status == OracleStatus::Member && !strong)
                results[i].cls = 1;
        } catch (const std::exception& e) {
            results[i].error = e.what();
        }
    });

    // grouped by (k, l), canonical order within a group
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int ka = pairs[a].first.size(), kb = pairs[b].first.size();
        if (ka != kb) return ka < kb;
        return pairs[a].second.size() < pairs[b].second.size();
    });

    static const char* kClassNames[] = {"a", "b", "undecided"};
    if (cfg.format == OutputFormat::Csv) out << "class,k,l,m,n\n";
    for (std::size_t i : order) {
        if (!results[i].error.empty()) throw std::logic_error(results[i].error);
        if (results[i].cls < 0) continue;
        const auto& [m, n] = pairs[i];
        const char* cls = kClassNames[results[i].cls];
        switch (cfg.format) {
        case OutputFormat::Json:
            out << ordered_json{{"class", cls},
                                {"k", m.size()},
                                {"l", n.size()},
                                {"m", tuple_to_json(m)},
                                {"n", tuple_to_json(n)}}
                       .dump()
                << '\n';
            break;
        case OutputFormat::Csv:
            out << cls << ',' << m.size() << ',' << n.size() << ','
                << csv_quote(format_tuple(m)) << ',' << csv_quote(format_tuple(n)) << '\n';
            break;
        case OutputFormat::Text:
            out << "class=" << cls << " k=" << m.size() << " l=" << n.size()
                << " m=" << format_tuple(m) << " n=" << format_tuple(n) << '\n';
            break;
        }
    }
    return kExitYes;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.table_id != "pm-join-paths") {
        err << "unknown table id: " << cfg.table_id << " (available: pm-join-paths)\n";
        return kExitUsage;
    }
    // single path joined with a union of paths on at most three vertices;
    // scan m well past where the criterion can hold so emptiness is shown
    std::vector<IntTuple> parts = partitions_bounded(3, 3);
    for (int m = 1; m <= 8; ++m) {
        for (int tn = 1; tn <= 3; ++tn) {
            std::vector<const IntTuple*> cell;
            for (const IntTuple& n : parts) {
                if (total(n) != tn) continue;
                if (classify_paths(IntTuple{m}, n, cfg.budget).ajo == AjoStatus::Yes)
                    cell.push_back(&n);
            }
            if (cell.empty()) continue;
            switch (cfg.format) {
            case OutputFormat::Json: {
                ordered_json tuples = ordered_json::array();
                for (const IntTuple* n : cell) tuples.push_back(tuple_to_json(*n));
                out << ordered_json{{"m", m}, {"total_n", tn}, {"tuples", tuples}}.dump()
                    << '\n';
                break;
            }
            case OutputFormat::Csv:
                for (const IntTuple* n : cell)
                    out << m << ',' << tn << ',' << csv_quote(format_tuple(*n)) << '\n';
                break;
            case OutputFormat::Text: {
                out << "m=" << m << " |n|=" << tn << ":";
                bool first = true;
                for (const IntTuple* n : cell) {
                    out << (first ? " " : " | ") << format_tuple(*n);
                    first = false;
                }
                out << '\n';
                break;
            }
            }
        }
    }
    return kExitYes;
}

} // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
    case Command::Classify: return cmd_classify(cfg, out, err);
    case Command::Witness: return cmd_witness(cfg, out, err);
    case Command::Enumerate: return cmd_enumerate(cfg, out);
    case Command::VerifyChain: return cmd_verify_chain(cfg, out, err);
    case Command::GapHunt: return cmd_gap_hunt(cfg, out);
    case Command::Table: return cmd_table(cfg, out, err);
    }
    return kExitUsage;
}

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision toolkit for join-orthogonalisable component size pairs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string m_str, n_str, format = "text";
    std::uint64_t budget = kDefaultBudget;
    int max_total = cfg.bounds.max_total, max_k = cfg.bounds.max_k, max_l = cfg.bounds.max_l;
    int pin_k = 0, pin_l = 0, jobs = 0;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget,
                        "search node budget per exact-oracle call, 0 for unlimited");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--m", m_str, "first size tuple, e.g. 2,2 or 2^3")->required();
        sub->add_option("--n", n_str, "second size tuple, e.g. 3,1^5")->required();
        add_budget(sub);
        add_format(sub);
    };
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--max-total", max_total, "largest tuple total")->check(CLI::PositiveNumber);
        sub->add_option("--max-k", max_k, "largest length of the shorter tuple, 0 for no cap");
        sub->add_option("--max-l", max_l, "largest length of the longer tuple, 0 for no cap");
        sub->add_option("--k", pin_k, "restrict the shorter tuple to this exact length")
            ->check(CLI::PositiveNumber);
        sub->add_option("--l", pin_l, "restrict the longer tuple to this exact length")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", jobs, "worker threads, 0 for all cores");
        add_budget(sub);
        add_format(sub);
    };

    add_pair(app.add_subcommand("classify", "decide one pair"));
    add_pair(app.add_subcommand("witness", "emit a validated witness for one pair"));
    add_bounds(app.add_subcommand("enumerate", "classify every pair within bounds"));
    add_bounds(app.add_subcommand("verify-chain",
                                  "cross-check the implication ladder within bounds"));
    add_bounds(app.add_subcommand("gap-hunt",
                                  "hunt pairs separating the necessary and sufficient tests"));
    auto* table = app.add_subcommand("table", "reproduce a published table");
    table->add_option("id", cfg.table_id, "table id (pm-join-paths)")->required();
    add_budget(table);
    add_format(table);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("joinortho");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    if (app.got_subcommand("classify")) cfg.command = Command::Classify;
    else if (app.got_subcommand("witness")) cfg.command = Command::Witness;
    else if (app.got_subcommand("enumerate")) cfg.command = Command::Enumerate;
    else if (app.got_subcommand("verify-chain")) cfg.command = Command::VerifyChain;
    else if (app.got_subcommand("gap-hunt")) cfg.command = Command::GapHunt;
    else cfg.command = Command::Table;

    cfg.budget = budget == 0 ? kUnlimitedBudget : budget;
    cfg.format = format == "json" ? OutputFormat::Json
               : format == "csv" ? OutputFormat::Csv
                                 : OutputFormat::Text;
    cfg.bounds.max_total = max_total;
    cfg.bounds.max_k = max_k;
    cfg.bounds.max_l = max_l;
    if (pin_k > 0) cfg.bounds.pin_k = pin_k;
    if (pin_l > 0) cfg.bounds.pin_l = pin_l;
    cfg.jobs = jobs;

    try {
        if (!m_str.empty()) cfg.m = parse_tuple(m_str);
        if (!n_str.empty()) cfg.n = parse_tuple(n_str);
    } catch (const ParseError& e) {
        err << "bad tuple: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return run_command(cfg, out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args, std::cout, std::cerr);
}

} // namespace joinortho::cli
