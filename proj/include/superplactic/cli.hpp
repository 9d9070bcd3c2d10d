#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alphabet.hpp"
#include "bumping.hpp"
#include "error.hpp"
#include "io.hpp"
#include "plactic.hpp"
#include "ring.hpp"
#include "rsk.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
enum Exit : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Digits 0..9, all even.
inline Alphabet default_alphabet()
{
    return Alphabet::make({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"}, std::vector<int>(10, 0));
}

namespace detail {

using io::json;

struct Options {
    std::string alphabet_file;
    std::string alphabet_p_file;
    bool json_output = false;

    std::string mode = "row";
    std::string tableau_file;
    std::string letters;
    std::size_t index = 0;
    std::string word;
    std::size_t k = 1;
    std::size_t limit = 50;
    std::string array_file;
    std::string t_file;
    std::string u_file;
    std::string alphabet_l_file;
    std::size_t max_cols = 3;
    std::string out_file;
    std::string shape;
    std::size_t p = 1;
};

/// --alphabet wins, then an "alphabet" object embedded in the input, then the default.
inline Alphabet resolve_alphabet(const std::string& file, const json* embedded, const char* key = "alphabet")
{
    if (!file.empty())
        return io::alphabet_from_json(io::load_json(file));
    if (embedded != nullptr && embedded->is_object() && embedded->contains(key))
        return io::alphabet_from_json(embedded->at(key));
    return default_alphabet();
}

inline std::size_t max_states_from_env()
{
    const char* env = std::getenv("SUPERPLACTIC_MAX_STATES");
    if (env == nullptr || *env == '\0')
        return ClassLimits{}.max_states;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        fail(Errc::malformed_input, std::string("SUPERPLACTIC_MAX_STATES is not an integer: ") + env);
    }
}

class Runner {
public:
    Runner(Options opt, std::ostream& out)
      : opt_(std::move(opt)), out_(out)
    {
    }

    void insert()
    {
        json tab_json;
        Alphabet a = load_tableau_alphabet(tab_json);
        Tableau t = opt_.tableau_file.empty() ? Tableau(a) : io::tableau_from_json(tab_json, a);
        Word letters = io::parse_word(opt_.letters, a);
        json steps = json::array();
        std::string trace_text;
        for (Letter x : letters.letters()) {
            Insertion ins = opt_.mode == "row" ? row_insert(t, x) : col_insert(x, t);
            json path = json::array();
            std::string path_text;
            for (const auto& step : ins.trace) {
                path.push_back({{"letter", a.symbol(step.letter)}, {"position", step.position}});
                path_text += " " + a.symbol(step.letter) + "@" + std::to_string(step.position);
            }
            steps.push_back({{"letter", a.symbol(x)}, {"box", {ins.box.row, ins.box.col}}, {"path", path}});
            trace_text += "insert " + a.symbol(x) + ": box (" + std::to_string(ins.box.row) + "," +
                          std::to_string(ins.box.col) + ") path" + path_text + "\n";
            t = std::move(ins.tableau);
        }
        if (opt_.json_output)
            emit({{"tableau", io::to_json(t)}, {"steps", steps}});
        else
            out_ << to_text(t) << trace_text;
    }

    void remove()
    {
        json tab_json;
        Alphabet a = load_tableau_alphabet(tab_json);
        Tableau t = io::tableau_from_json(tab_json, a);
        Deletion d = opt_.mode == "row" ? row_delete(t, opt_.index) : col_delete(t, opt_.index);
        if (opt_.json_output)
            emit({{"tableau", io::to_json(d.tableau)}, {"letter", a.symbol(d.letter)}});
        else
            out_ << to_text(d.tableau) << "letter: " << a.symbol(d.letter) << "\n";
    }

    void tableau_of_word_cmd()
    {
        Alphabet a = resolve_alphabet(opt_.alphabet_file, nullptr);
        Tableau t = tableau_of_word(io::parse_word(opt_.word, a));
        if (opt_.json_output)
            emit(io::to_json(t));
        else
            out_ << to_text(t);
    }

    void word_of_tableau_cmd()
    {
        json tab_json;
        Alphabet a = load_tableau_alphabet(tab_json);
        Word w = word_of(io::tableau_from_json(tab_json, a));
        if (opt_.json_output)
            emit({{"word", w.symbols()}});
        else
            out_ << io::format_word(w) << "\n";
    }

    void normal_form()
    {
        Alphabet a = resolve_alphabet(opt_.alphabet_file, nullptr);
        Word w = canonical(io::parse_word(opt_.word, a));
        if (opt_.json_output)
            emit({{"word", w.symbols()}});
        else
            out_ << io::format_word(w) << "\n";
    }

    void plactic_class_cmd()
    {
        Alphabet a = resolve_alphabet(opt_.alphabet_file, nullptr);
        ClassLimits limits;
        limits.max_states = max_states_from_env();
        auto members = plactic_class(io::parse_word(opt_.word, a), limits);
        json list = json::array();
        std::string text = "size: " + std::to_string(members.size()) + "\n";
        std::size_t shown = 0;
        for (const auto& w : members) {
            if (shown++ == opt_.limit)
                break;
            list.push_back(w.symbols());
            text += io::format_word(w) + "\n";
        }
        if (opt_.json_output)
            emit({{"size", members.size()}, {"members", list}});
        else
            out_ << text;
    }

    void greene()
    {
        Alphabet a = resolve_alphabet(opt_.alphabet_file, nullptr);
        Word w = io::parse_word(opt_.word, a);
        if (opt_.mode == "shape") {
            std::size_t row = greene_via_shape(w, opt_.k, GreeneMode::row);
            std::size_t col = greene_via_shape(w, opt_.k, GreeneMode::col);
            if (opt_.json_output)
                emit({{"k", opt_.k}, {"row", row}, {"col", col}});
            else
                out_ << "row: " << row << "\ncol: " << col << "\n";
            return;
        }
        std::size_t value = opt_.mode == "row" ? greene_row(w, opt_.k) : greene_col(w, opt_.k);
        if (opt_.json_output)
            emit({{"k", opt_.k}, {opt_.mode, value}});
        else
            out_ << value << "\n";
    }

    void rsk()
    {
        TwoRowedArray s = load_array();
        auto [t, u] = rsk_forward(s);
        if (opt_.json_output)
            emit({{"T", io::to_json(t)}, {"U", io::to_json(u)}});
        else
            out_ << "T:\n" << to_text(t) << "U:\n" << to_text(u);
    }

    void rsk_inverse_cmd()
    {
        json tj = io::load_json(opt_.t_file);
        json uj = io::load_json(opt_.u_file);
        Alphabet l = resolve_alphabet(opt_.alphabet_file, &tj);
        Alphabet p = opt_.alphabet_p_file.empty() && !uj.contains("alphabet") ? l
                                                                               : resolve_alphabet(opt_.alphabet_p_file, &uj);
        TwoRowedArray s = rsk_inverse(io::tableau_from_json(tj, l), io::tableau_from_json(uj, p));
        if (opt_.json_output)
            emit(io::to_json(s));
        else
            out_ << io::to_text(s);
    }

    void symmetry()
    {
        TwoRowedArray s = load_array();
        TwoRowedArray swapped = array_involution(s);
        bool sym = has_symmetry(s);
        bool hyp = susy_hypothesis(s);
        if (opt_.json_output)
            emit({{"has_symmetry", sym}, {"hypothesis", hyp}, {"involution", io::to_json(swapped)}});
        else
            out_ << "has symmetry: " << (sym ? "true" : "false") << "\nhypothesis: " << (hyp ? "true" : "false")
                 << "\ninvolution:\n"
                 << io::to_text(swapped);
    }

    void probe()
    {
        Alphabet l = resolve_alphabet(opt_.alphabet_l_file.empty() ? opt_.alphabet_file : opt_.alphabet_l_file, nullptr);
        Alphabet p = opt_.alphabet_p_file.empty() ? l : resolve_alphabet(opt_.alphabet_p_file, nullptr);
        std::ofstream report_file;
        if (!opt_.out_file.empty()) {
            report_file.open(opt_.out_file);
            if (!report_file)
                fail(Errc::malformed_input, "cannot write '" + opt_.out_file + "'");
        }
        // Every asymmetric array goes to the report; symmetric ones only as cell examples.
        auto report = symmetry_probe(l, p, opt_.max_cols, [&](const TwoRowedArray& s, bool hyp, bool sym) {
            if (report_file && !sym) {
                json line = io::to_json(s);
                line["kind"] = "array";
                line["hypothesis"] = hyp;
                line["symmetric"] = sym;
                report_file << line.dump() << "\n";
            }
        });
        json summary = {{"kind", "summary"},
                        {"max_cols", opt_.max_cols},
                        {"alphabet_l", io::to_json(l)},
                        {"alphabet_p", io::to_json(p)},
                        {"total", report.total()},
                        {"hypothesis_symmetric", report.counts[1][1]},
                        {"hypothesis_asymmetric", report.counts[1][0]},
                        {"other_symmetric", report.counts[0][1]},
                        {"other_asymmetric", report.counts[0][0]}};
        if (report_file)
            report_file << summary.dump() << "\n";
        if (opt_.json_output) {
            emit(summary);
        } else {
            out_ << "arrays: " << report.total() << "\n"
                 << "hypothesis, symmetric: " << report.counts[1][1] << "\n"
                 << "hypothesis, asymmetric: " << report.counts[1][0] << "\n"
                 << "other, symmetric: " << report.counts[0][1] << "\n"
                 << "other, asymmetric: " << report.counts[0][0] << "\n";
        }
    }

    void pieri()
    {
        Alphabet a = resolve_alphabet(opt_.alphabet_file, nullptr);
        Partition lambda = io::parse_partition(opt_.shape);
        auto report = pieri_check(lambda, opt_.p, a, opt_.mode == "row" ? PieriMode::row : PieriMode::col);
        json shapes = json::array();
        std::string text = std::string("verdict: ") + (report.equal ? "equal" : "different") + "\n";
        for (const auto& d : report.shapes) {
            if (!d.expected && d.lhs_terms == 0 && d.rhs_terms == 0)
                continue;
            shapes.push_back({{"shape", io::to_json(d.shape)},
                              {"multiplicity", d.expected ? 1 : 0},
                              {"lhs_terms", d.lhs_terms},
                              {"rhs_terms", d.rhs_terms},
                              {"mismatched", d.mismatched}});
            text += io::format_partition(d.shape) + " x" + (d.expected ? "1" : "0") +
                    " terms=" + std::to_string(d.lhs_terms) + "/" + std::to_string(d.rhs_terms) +
                    " mismatched=" + std::to_string(d.mismatched) + "\n";
        }
        if (opt_.json_output)
            emit({{"equal", report.equal}, {"mode", opt_.mode}, {"shapes", shapes}});
        else
            out_ << text;
    }

    void validate_cmd()
    {
        if (!opt_.array_file.empty()) {
            TwoRowedArray s = load_array();
            if (opt_.json_output)
                emit({{"valid", true}, {"array", io::to_json(s)}});
            else
                out_ << "valid array with " << s.size() << " columns\n";
            return;
        }
        json tab_json;
        Alphabet a = load_tableau_alphabet(tab_json);
        Tableau t = io::tableau_from_json(tab_json, a);
        if (opt_.json_output)
            emit({{"valid", true}, {"tableau", io::to_json(t)}});
        else
            out_ << "valid tableau of shape " << io::format_partition(t.shape()) << "\n";
    }

private:
    void emit(const json& j) { out_ << j.dump() << "\n"; }

    Alphabet load_tableau_alphabet(json& tab_json)
    {
        if (!opt_.tableau_file.empty())
            tab_json = io::load_json(opt_.tableau_file);
        return resolve_alphabet(opt_.alphabet_file, &tab_json);
    }

    TwoRowedArray load_array()
    {
        json j = io::load_json(opt_.array_file);
        Alphabet l = resolve_alphabet(opt_.alphabet_file, &j, "top_alphabet");
        Alphabet p = opt_.alphabet_p_file.empty() && !j.contains("bottom_alphabet")
                         ? l
                         : resolve_alphabet(opt_.alphabet_p_file, &j, "bottom_alphabet");
        return io::array_from_json(j, l, p);
    }

    Options opt_;
    std::ostream& out_;
};

} // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using detail::Options;
    Options opt;
    CLI::App app{"Super semistandard tableaux, super plactic monoid and super RSK"};
    app.name("superplactic");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--alphabet", opt.alphabet_file, "Signed alphabet JSON file");
    app.add_option("--alphabet-p", opt.alphabet_p_file, "Bottom (place) alphabet JSON file");
    app.add_flag("--json", opt.json_output, "Machine-readable output");

    auto modes = CLI::IsMember({"row", "col"});
    std::function<void(detail::Runner&)> action;

    auto* insert = app.add_subcommand("insert", "Row- or column-insert letters into a tableau");
    insert->add_option("--mode", opt.mode)->check(modes);
    insert->add_option("--tableau", opt.tableau_file, "Tableau JSON file (default: empty)");
    insert->add_option("--letters", opt.letters, "Comma-separated letters")->required();
    insert->callback([&] { action = &detail::Runner::insert; });

    auto* del = app.add_subcommand("delete", "Row- or column-delete at a corner");
    del->add_option("--mode", opt.mode)->check(modes);
    del->add_option("--tableau", opt.tableau_file)->required();
    del->add_option("--index", opt.index, "Row (row mode) or column (col mode) index")->required();
    del->callback([&] { action = &detail::Runner::remove; });

    auto* tow = app.add_subcommand("tableau-of-word", "Insert a word into the empty tableau");
    tow->add_option("--word", opt.word)->required();
    tow->callback([&] { action = &detail::Runner::tableau_of_word_cmd; });

    auto* wot = app.add_subcommand("word-of-tableau", "Reading word of a tableau");
    wot->add_option("--tableau", opt.tableau_file)->required();
    wot->callback([&] { action = &detail::Runner::word_of_tableau_cmd; });

    auto* nf = app.add_subcommand("normal-form", "Canonical representative of a plactic class");
    nf->add_option("--word", opt.word)->required();
    nf->callback([&] { action = &detail::Runner::normal_form; });

    auto* cls = app.add_subcommand("class", "Enumerate a plactic class");
    cls->add_option("--word", opt.word)->required();
    cls->add_option("--limit", opt.limit, "Maximum members printed");
    cls->callback([&] { action = &detail::Runner::plactic_class_cmd; });

    auto* gr = app.add_subcommand("greene", "Greene invariants");
    gr->add_option("--word", opt.word)->required();
    gr->add_option("--k", opt.k)->required();
    gr->add_option("--mode", opt.mode)->check(CLI::IsMember({"row", "col", "shape"}));
    gr->callback([&] { action = &detail::Runner::greene; });

    auto* rs = app.add_subcommand("rsk", "Super RSK of a two-rowed array");
    rs->add_option("--array", opt.array_file)->required();
    rs->callback([&] { action = &detail::Runner::rsk; });

    auto* ri = app.add_subcommand("rsk-inverse", "Two-rowed array of a tableau pair");
    ri->add_option("--t", opt.t_file)->required();
    ri->add_option("--u", opt.u_file)->required();
    ri->callback([&] { action = &detail::Runner::rsk_inverse_cmd; });

    auto* sy = app.add_subcommand("symmetry", "Check whether an array has symmetry");
    sy->add_option("--array", opt.array_file)->required();
    sy->callback([&] { action = &detail::Runner::symmetry; });

    auto* pr = app.add_subcommand("probe", "Classify all small arrays by symmetry");
    pr->add_option("--alphabet-l", opt.alphabet_l_file);
    pr->add_option("--max-cols", opt.max_cols)->required();
    pr->add_option("--out", opt.out_file, "JSON-lines report file");
    pr->callback([&] { action = &detail::Runner::probe; });

    auto* pi = app.add_subcommand("pieri", "Check the super Pieri rule");
    pi->add_option("--shape", opt.shape)->required();
    pi->add_option("--p", opt.p)->required();
    pi->add_option("--mode", opt.mode)->check(modes);
    pi->callback([&] { action = &detail::Runner::pieri; });

    auto* va = app.add_subcommand("validate", "Validate a tableau or two-rowed array");
    auto* vt = va->add_option("--tableau", opt.tableau_file);
    auto* vs = va->add_option("--array", opt.array_file);
    vt->excludes(vs);
    va->require_option(1);
    va->callback([&] { action = &detail::Runner::validate_cmd; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return Exit::usage_error;
    }

    try {
        detail::Runner runner(opt, out);
        action(runner);
        return Exit::ok;
    } catch (const Error& e) {
        err << "error: " << name(e.code()) << ": " << e.what() << "\n";
        return Exit::domain_error;
    }
}

} // namespace superplactic::cli
