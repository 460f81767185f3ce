#include "ramabern/cli.hpp"

#include "ramabern/catalog.hpp"
#include "ramabern/lfunction.hpp"
#include "ramabern/moments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ramabern {
namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

Format parse_format(std::string text, const std::string& origin) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (text == "plain") return Format::Plain;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("invalid format '" + text + "' from " + origin +
                                " (expected plain, json, or csv)");
}

struct CommonOpts {
    std::string format_flag;
    int decimal_digits = -1;

    Format format() const {
        if (!format_flag.empty()) return parse_format(format_flag, "--format");
        if (const char* env = std::getenv("RB_DEFAULT_FORMAT");
            env != nullptr && *env != '\0')
            return parse_format(env, "RB_DEFAULT_FORMAT");
        return Format::Plain;
    }

    /// Plain-only decimal rendering; JSON/CSV always carry exact "p/q".
    void validate(Format f) const {
        if (decimal_digits >= 0 && f != Format::Plain)
            throw std::invalid_argument(
                "--decimal-digits applies to plain output only; JSON/CSV keep exact p/q strings");
    }

    std::string render(const Rat& r) const {
        return decimal_digits >= 0 ? r.decimal(static_cast<unsigned>(decimal_digits)) : r.str();
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format_flag, "Output format: plain, json, or csv");
    cmd->add_option("--decimal-digits", c.decimal_digits,
                    "Render rationals as decimal approximations (plain format only)")
        ->check(CLI::Range(1, 1000));
}

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    q += '"';
    return q;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    for (const auto& r : v) s.push_back(r.str());
    return s;
}

ordered_json json_complex(std::complex<double> z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

RacahParams parse_params_csv(const std::string& text) {
    std::vector<Rat> vals;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        vals.push_back(Rat::parse(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (vals.size() != 4)
        throw std::invalid_argument("--params expects exactly four rationals "
                                    "alpha,beta,gamma,delta; got " +
                                    std::to_string(vals.size()));
    return RacahParams{vals[0], vals[1], vals[2], vals[3]};
}

ordered_json json_params(const RacahParams& p) {
    return ordered_json::array({p.alpha.str(), p.beta.str(), p.gamma.str(), p.delta.str()});
}

// ---------------------------------------------------------------------------
// Family selection shared by moments / jacobi / hankel.

struct FamilyOpts {
    std::string params_text;
    std::string theorem_id;
    std::string shift_text;

    void add_to(CLI::App* cmd) {
        auto* p = cmd->add_option("--params", params_text,
                                  "Racah parameters alpha,beta,gamma,delta (e.g. 0,-1/2,0,0)");
        auto* t = cmd->add_option("--theorem", theorem_id,
                                  "Take the family from a catalog entry (T1..T5)");
        auto* s = cmd->add_option("--shift", shift_text,
                                  "Shift c: the family is R_n(y + c) (default 0)");
        p->excludes(t);
        t->excludes(p);
        s->excludes(t);
    }

    /// Resolved (params, shift) pair.
    std::pair<RacahParams, Rat> resolve() const {
        if (!theorem_id.empty()) {
            const auto& e = catalog_entry(theorem_id);
            return {e.spec.params, e.spec.shift};
        }
        if (params_text.empty())
            throw std::invalid_argument("one of --params or --theorem is required");
        Rat shift = shift_text.empty() ? Rat(0) : Rat::parse(shift_text);
        return {parse_params_csv(params_text), shift};
    }

    ordered_json json_inputs(const RacahParams& p, const Rat& shift) const {
        ordered_json in;
        if (!theorem_id.empty()) in["theorem"] = catalog_entry(theorem_id).id;
        in["params"] = json_params(p);
        in["shift"] = shift.str();
        return in;
    }
};

// ---------------------------------------------------------------------------
// Subcommand runners. Each returns the process exit code.

int run_seq(std::ostream& out, const CommonOpts& common, const std::string& kind_text,
            unsigned count) {
    Format fmt = common.format();
    common.validate(fmt);
    RSeqKind kind = rseq_kind_parse(kind_text);
    std::vector<Rat> vals = r_sequence(kind, count);

    switch (fmt) {
        case Format::Plain: {
            std::vector<std::string> parts;
            parts.reserve(vals.size());
            for (const auto& v : vals) parts.push_back(common.render(v));
            out << join(parts, ", ") << "\n";
            break;
        }
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "seq";
            doc["inputs"] = {{"kind", std::string(rseq_kind_name(kind))}, {"count", count}};
            doc["values"] = rat_strings(vals);
            doc["report"] = ordered_json::object();
            emit_json(out, doc);
            break;
        }
        case Format::Csv: {
            out << "n,value\n";
            for (std::size_t n = 0; n < vals.size(); ++n)
                out << n << "," << csv_field(vals[n].str()) << "\n";
            break;
        }
    }
    return 0;
}

int run_verify(std::ostream& out, const CommonOpts& common, std::vector<std::string> ids,
               unsigned depth, bool inject_fault) {
    Format fmt = common.format();
    common.validate(fmt);
    if (common.decimal_digits >= 0)
        throw std::invalid_argument("--decimal-digits is not available for verify: "
                                    "the comparison is exact");

    if (ids.empty()) ids = {"all"};
    std::vector<std::string> selected;
    for (auto id : ids) {
        std::transform(id.begin(), id.end(), id.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        if (id == "ALL") {
            for (const auto& e : catalog()) selected.push_back(e.id);
        } else {
            if (id.size() == 1 && id[0] >= '1' && id[0] <= '5') id = "T" + id;
            selected.push_back(catalog_entry(id).id);
        }
    }

    struct Row {
        std::string id;
        TheoremReport rep;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    for (const auto& id : selected) {
        TheoremSpec spec = catalog_entry(id).spec;
        if (inject_fault) spec.params.delta += Rat(1, 7);
        TheoremReport rep = verify_theorem(spec, depth);
        all_ok = all_ok && rep.ok();
        rows.push_back({id, std::move(rep)});
    }

    switch (fmt) {
        case Format::Plain:
            for (const auto& r : rows) {
                out << r.id << ": " << (r.rep.ok() ? "ok" : "FAILED") << " (depth " << depth
                    << ")";
                if (!r.rep.ok()) {
                    if (!r.rep.normalizer_ok)
                        out << "; normalizer mismatch: psi(weight) = " << r.rep.residues[0].str();
                    if (r.rep.first_mismatch >= 0) out << "; first mismatch at n=" << r.rep.first_mismatch;
                }
                out << "\n";
            }
            break;
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "verify";
            doc["inputs"] = {{"theorems", selected}, {"depth", depth}};
            doc["values"] = ordered_json::array();
            ordered_json results = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json jr;
                jr["id"] = r.id;
                jr["ok"] = r.rep.ok();
                jr["normalizer_ok"] = r.rep.normalizer_ok;
                jr["moments_equal"] = r.rep.moments_equal;
                jr["residues_vanish"] = r.rep.residues_vanish;
                jr["first_mismatch"] = r.rep.first_mismatch;
                ordered_json jrows = ordered_json::array();
                for (unsigned n = 0; n < r.rep.depth; ++n)
                    jrows.push_back({{"n", n},
                                     {"favard", r.rep.favard[n].str()},
                                     {"psi", r.rep.psi_side[n].str()},
                                     {"target", r.rep.target[n].str()},
                                     {"residue", r.rep.residues[n].str()}});
                jr["rows"] = std::move(jrows);
                results.push_back(std::move(jr));
            }
            doc["report"] = {{"all_ok", all_ok}, {"results", std::move(results)}};
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "id,n,favard,psi,target,residue\n";
            for (const auto& r : rows)
                for (unsigned n = 0; n < r.rep.depth; ++n)
                    out << r.id << "," << n << "," << csv_field(r.rep.favard[n].str()) << ","
                        << csv_field(r.rep.psi_side[n].str()) << ","
                        << csv_field(r.rep.target[n].str()) << ","
                        << csv_field(r.rep.residues[n].str()) << "\n";
            break;
    }
    return all_ok ? 0 : 1;
}

int run_moments(std::ostream& out, const CommonOpts& common, const FamilyOpts& fam,
                unsigned count) {
    Format fmt = common.format();
    common.validate(fmt);
    auto [params, shift] = fam.resolve();
    MomentSeq mu = favard_moments(params, shift, count);

    switch (fmt) {
        case Format::Plain: {
            std::vector<std::string> parts;
            for (const auto& v : mu) parts.push_back(common.render(v));
            out << join(parts, ", ") << "\n";
            break;
        }
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "moments";
            ordered_json in = fam.json_inputs(params, shift);
            in["count"] = count;
            doc["inputs"] = std::move(in);
            doc["values"] = rat_strings(mu);
            doc["report"] = ordered_json::object();
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "n,mu\n";
            for (std::size_t n = 0; n < mu.size(); ++n)
                out << n << "," << csv_field(mu[n].str()) << "\n";
            break;
    }
    return 0;
}

int run_jacobi(std::ostream& out, const CommonOpts& common, const FamilyOpts& fam,
               unsigned count) {
    Format fmt = common.format();
    common.validate(fmt);
    auto [params, shift] = fam.resolve();
    MomentSeq mu = favard_moments(params, shift, count);
    JacobiData jd = jacobi_from_moments(mu);

    switch (fmt) {
        case Format::Plain: {
            std::vector<std::string> bs, ls;
            for (const auto& v : jd.b) bs.push_back(common.render(v));
            for (const auto& v : jd.lam) ls.push_back(common.render(v));
            out << "b:   " << join(bs, ", ") << "\n";
            out << "lam: " << join(ls, ", ") << "\n";
            break;
        }
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "jacobi";
            ordered_json in = fam.json_inputs(params, shift);
            in["count"] = count;
            doc["inputs"] = std::move(in);
            doc["values"] = ordered_json::array();
            doc["report"] = {{"b", rat_strings(jd.b)}, {"lam", rat_strings(jd.lam)}};
            emit_json(out, doc);
            break;
        }
        case Format::Csv: {
            out << "k,b,lam\n";
            std::size_t rows = std::max(jd.b.size(), jd.lam.size());
            for (std::size_t k = 0; k < rows; ++k) {
                out << k << ",";
                if (k < jd.b.size()) out << csv_field(jd.b[k].str());
                out << ",";
                if (k < jd.lam.size()) out << csv_field(jd.lam[k].str());
                out << "\n";
            }
            break;
        }
    }
    return 0;
}

int run_hankel(std::ostream& out, const CommonOpts& common, const FamilyOpts& fam,
               unsigned size) {
    Format fmt = common.format();
    common.validate(fmt);
    auto [params, shift] = fam.resolve();
    MomentSeq mu = favard_moments(params, shift, size == 0 ? 0 : 2 * size - 1);
    std::vector<Rat> dets;
    dets.reserve(size);
    for (unsigned n = 1; n <= size; ++n) dets.push_back(hankel_det(mu, n));

    switch (fmt) {
        case Format::Plain: {
            std::vector<std::string> parts;
            for (const auto& v : dets) parts.push_back(common.render(v));
            out << join(parts, ", ") << "\n";
            break;
        }
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "hankel";
            ordered_json in = fam.json_inputs(params, shift);
            in["size"] = size;
            doc["inputs"] = std::move(in);
            doc["values"] = rat_strings(dets);
            doc["report"] = ordered_json::object();
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "n,det\n";
            for (std::size_t i = 0; i < dets.size(); ++i)
                out << (i + 1) << "," << csv_field(dets[i].str()) << "\n";
            break;
    }
    return 0;
}

int run_ushift(std::ostream& out, const CommonOpts& common, const std::string& u_text,
               unsigned depth) {
    Format fmt = common.format();
    common.validate(fmt);
    Rat u = Rat::parse(u_text);
    UShiftReport rep = verify_u_shift(u, depth);

    switch (fmt) {
        case Format::Plain:
            out << "u = " << rep.u.str() << ", family argument shifted by " << rep.shift.str()
                << ": " << (rep.ok() ? "ok" : "FAILED") << " (depth " << depth << ")";
            if (!rep.ok() && rep.first_mismatch >= 0)
                out << "; first mismatch at n=" << rep.first_mismatch;
            out << "\n";
            break;
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "ushift";
            doc["inputs"] = {{"u", rep.u.str()}, {"depth", depth}};
            doc["values"] = ordered_json::array();
            ordered_json rows = ordered_json::array();
            for (unsigned n = 0; n < rep.depth; ++n)
                rows.push_back({{"n", n},
                                {"psi", rep.psi_side[n].str()},
                                {"favard", rep.favard[n].str()}});
            doc["report"] = {{"shift", rep.shift.str()},
                             {"ok", rep.ok()},
                             {"first_mismatch", rep.first_mismatch},
                             {"rows", std::move(rows)}};
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "n,psi,favard\n";
            for (unsigned n = 0; n < rep.depth; ++n)
                out << n << "," << csv_field(rep.psi_side[n].str()) << ","
                    << csv_field(rep.favard[n].str()) << "\n";
            break;
    }
    return rep.ok() ? 0 : 1;
}

int run_lvalue(std::ostream& out, const CommonOpts& common, unsigned n,
               const std::string& poly_text) {
    Format fmt = common.format();
    common.validate(fmt);
    if (n == 0) throw std::invalid_argument("--n must be >= 1 (the value taken is at s = 1 - n)");
    LSeriesSpec spec = LSeriesSpec::from_poly(Poly::parse(poly_text));
    Rat v = l_value_neg(spec, n);

    switch (fmt) {
        case Format::Plain:
            out << common.render(v) << "\n";
            break;
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "lvalue";
            doc["inputs"] = {{"n", n}, {"poly", spec.P.str()}};
            doc["values"] = ordered_json::array({v.str()});
            doc["report"] = ordered_json::object();
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "n,value\n" << n << "," << csv_field(v.str()) << "\n";
            break;
    }
    return 0;
}

int run_leval(std::ostream& out, const CommonOpts& common, const char* command, double s_re,
              double s_im, double tol, unsigned long max_terms, unsigned long terms,
              const std::string& poly_text) {
    Format fmt = common.format();
    common.validate(fmt);
    if (common.decimal_digits >= 0)
        throw std::invalid_argument("--decimal-digits applies to exact commands only");
    LSeriesSpec spec = LSeriesSpec::from_poly(Poly::parse(poly_text));
    const bool direct = std::string(command) == "ldirect";
    std::complex<double> s{s_re, s_im};
    LEvalResult res = direct ? l_direct(spec, s, terms) : l_eval(spec, s, tol, max_terms);

    switch (fmt) {
        case Format::Plain:
            out << format_double(res.value.real()) << (res.value.imag() < 0 ? " - " : " + ")
                << format_double(std::abs(res.value.imag())) << "i\n";
            out << "tail estimate: " << format_double(res.tail_estimate) << "\n";
            out << "terms used: " << res.terms_used << "\n";
            if (!direct) out << "converged: " << (res.converged ? "yes" : "no") << "\n";
            break;
        case Format::Json: {
            ordered_json doc;
            doc["command"] = command;
            ordered_json in;
            in["s"] = json_complex(s);
            if (direct) {
                in["terms"] = terms;
            } else {
                in["tol"] = tol;
                in["max_terms"] = max_terms;
            }
            in["poly"] = spec.P.str();
            doc["inputs"] = std::move(in);
            doc["values"] = ordered_json::array({json_complex(res.value)});
            doc["report"] = {{"tail_estimate", res.tail_estimate},
                             {"terms_used", res.terms_used},
                             {"converged", res.converged}};
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "re,im,tail_estimate,terms_used,converged\n";
            out << format_double(res.value.real()) << "," << format_double(res.value.imag())
                << "," << format_double(res.tail_estimate) << "," << res.terms_used << ","
                << (res.converged ? "true" : "false") << "\n";
            break;
    }
    return 0;
}

int run_catalog(std::ostream& out, const CommonOpts& common) {
    Format fmt = common.format();
    common.validate(fmt);
    const auto& entries = catalog();

    switch (fmt) {
        case Format::Plain:
            for (const auto& e : entries) {
                const TheoremSpec& s = e.spec;
                out << e.id << ": " << e.description << "\n";
                out << "  params: alpha=" << s.params.alpha.str()
                    << " beta=" << s.params.beta.str() << " gamma=" << s.params.gamma.str()
                    << " delta=" << s.params.delta.str() << "\n";
                out << "  weight: " << s.weight.str() << "\n";
                out << "  subst: " << s.subst.str() << "\n";
                out << "  shift: " << s.shift.str() << "\n";
                out << "  normalizer: " << s.normalizer.str() << "\n";
                out << "  target: 2^n * " << rseq_kind_name(s.target.kind) << "[n+"
                    << s.target.offset << "] / " << rseq_kind_name(s.target.kind) << "["
                    << s.target.offset << "]\n";
            }
            break;
        case Format::Json: {
            ordered_json doc;
            doc["command"] = "catalog";
            doc["inputs"] = ordered_json::object();
            doc["values"] = ordered_json::array();
            ordered_json jentries = ordered_json::array();
            for (const auto& e : entries) {
                const TheoremSpec& s = e.spec;
                jentries.push_back({{"id", e.id},
                                    {"params", json_params(s.params)},
                                    {"weight", s.weight.str()},
                                    {"subst", s.subst.str()},
                                    {"shift", s.shift.str()},
                                    {"normalizer", s.normalizer.str()},
                                    {"target_kind", std::string(rseq_kind_name(s.target.kind))},
                                    {"target_offset", s.target.offset},
                                    {"description", e.description}});
            }
            doc["report"] = {{"entries", std::move(jentries)}};
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "id,alpha,beta,gamma,delta,weight,subst,shift,normalizer,target_kind,"
                   "target_offset\n";
            for (const auto& e : entries) {
                const TheoremSpec& s = e.spec;
                out << e.id << "," << csv_field(s.params.alpha.str()) << ","
                    << csv_field(s.params.beta.str()) << "," << csv_field(s.params.gamma.str())
                    << "," << csv_field(s.params.delta.str()) << ","
                    << csv_field(s.weight.str()) << "," << csv_field(s.subst.str()) << ","
                    << csv_field(s.shift.str()) << "," << csv_field(s.normalizer.str()) << ","
                    << rseq_kind_name(s.target.kind) << "," << s.target.offset << "\n";
            }
            break;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ramanujan-Bernoulli sequences, Racah orthogonality checks, "
                 "and the attached non-standard L-function"};
    app.require_subcommand(1);

    CommonOpts common;
    int exit_code = 0;

    // seq
    auto* seq = app.add_subcommand("seq", "Print the quadratic-binomial Bernoulli sequences");
    std::string seq_kind = "rplus";
    unsigned seq_count = 10;
    seq->add_option("--kind", seq_kind, "Sequence: rplus or rminus")->capture_default_str();
    seq->add_option("--count", seq_count, "Number of values")->capture_default_str();
    add_common(seq, common);
    seq->callback([&] { exit_code = run_seq(out, common, seq_kind, seq_count); });

    // verify
    auto* verify = app.add_subcommand("verify", "Check the five orthogonality statements");
    std::vector<std::string> verify_ids;
    unsigned verify_depth = 40;
    bool inject_fault = false;
    verify->add_option("--theorem", verify_ids,
                       "Which statements: all, or any of 1..5 / T1..T5 (repeatable)");
    verify->add_option("--depth", verify_depth, "Moment indices checked: 0 <= n < depth")
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook: perturbs delta
    add_common(verify, common);
    verify->callback(
        [&] { exit_code = run_verify(out, common, verify_ids, verify_depth, inject_fault); });

    // moments
    auto* moments = app.add_subcommand("moments", "Favard moments of a Racah family");
    FamilyOpts mom_fam;
    unsigned mom_count = 20;
    mom_fam.add_to(moments);
    moments->add_option("--count", mom_count, "Number of moments")->capture_default_str();
    add_common(moments, common);
    moments->callback([&] { exit_code = run_moments(out, common, mom_fam, mom_count); });

    // jacobi
    auto* jacobi = app.add_subcommand(
        "jacobi", "Three-term recurrence / J-fraction coefficients of a Racah family");
    FamilyOpts jac_fam;
    unsigned jac_count = 20;
    jac_fam.add_to(jacobi);
    jacobi->add_option("--count", jac_count, "Number of moments to derive the data from")
        ->capture_default_str();
    add_common(jacobi, common);
    jacobi->callback([&] { exit_code = run_jacobi(out, common, jac_fam, jac_count); });

    // hankel
    auto* hankel = app.add_subcommand("hankel", "Hankel determinants of the moment sequence");
    FamilyOpts han_fam;
    unsigned han_size = 8;
    han_fam.add_to(hankel);
    hankel->add_option("--size", han_size, "Largest matrix size n (emits det 1..n)")
        ->capture_default_str();
    add_common(hankel, common);
    hankel->callback([&] { exit_code = run_hankel(out, common, han_fam, han_size); });

    // ushift
    auto* ushift = app.add_subcommand(
        "ushift", "Check psi(((x+u)(x+1-u))^n) against the shifted Racah family");
    std::string u_text = "1/2";
    unsigned ushift_depth = 12;
    ushift->add_option("--u", u_text, "Shift parameter u")->capture_default_str();
    ushift->add_option("--depth", ushift_depth, "Indices checked: 0 <= n < depth")
        ->capture_default_str();
    add_common(ushift, common);
    ushift->callback([&] { exit_code = run_ushift(out, common, u_text, ushift_depth); });

    // lvalue
    auto* lvalue = app.add_subcommand("lvalue", "Exact series value at s = 1 - n");
    unsigned lv_n = 1;
    std::string lv_poly = "1,3/2,1/2";
    lvalue->add_option("--n", lv_n, "Evaluation point s = 1 - n, n >= 1")->required();
    lvalue->add_option("--poly", lv_poly, "Base polynomial, coefficients c0,c1,...")
        ->capture_default_str();
    add_common(lvalue, common);
    lvalue->callback([&] { exit_code = run_lvalue(out, common, lv_n, lv_poly); });

    // leval
    auto* leval = app.add_subcommand(
        "leval", "Numeric series value via the analytic continuation, Re(s) > 1 - 1/d");
    double le_re = 2.0, le_im = 0.0, le_tol = 1e-10;
    unsigned long le_max = 10000000;
    std::string le_poly = "1,3/2,1/2";
    leval->add_option("--s-re", le_re, "Re(s)")->capture_default_str();
    leval->add_option("--s-im", le_im, "Im(s)")->capture_default_str();
    leval->add_option("--tol", le_tol, "Stop when the tail estimate drops below this")
        ->capture_default_str();
    leval->add_option("--max-terms", le_max, "Give up after this many terms")
        ->capture_default_str();
    leval->add_option("--poly", le_poly, "Base polynomial, coefficients c0,c1,...")
        ->capture_default_str();
    add_common(leval, common);
    leval->callback([&] {
        exit_code = run_leval(out, common, "leval", le_re, le_im, le_tol, le_max, 0, le_poly);
    });

    // ldirect
    auto* ldirect =
        app.add_subcommand("ldirect", "Naive partial sum of the series, Re(s) > 1 (oracle)");
    double ld_re = 2.0, ld_im = 0.0;
    unsigned long ld_terms = 1000000;
    std::string ld_poly = "1,3/2,1/2";
    ldirect->add_option("--s-re", ld_re, "Re(s)")->capture_default_str();
    ldirect->add_option("--s-im", ld_im, "Im(s)")->capture_default_str();
    ldirect->add_option("--terms", ld_terms, "Number of terms")->capture_default_str();
    ldirect->add_option("--poly", ld_poly, "Base polynomial, coefficients c0,c1,...")
        ->capture_default_str();
    add_common(ldirect, common);
    ldirect->callback([&] {
        exit_code = run_leval(out, common, "ldirect", ld_re, ld_im, 0.0, 0, ld_terms, ld_poly);
    });

    // catalog
    auto* cat = app.add_subcommand("catalog", "List the five frozen orthogonality statements");
    add_common(cat, common);
    cat->callback([&] { exit_code = run_catalog(out, common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const InadmissibleParams& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace ramabern
