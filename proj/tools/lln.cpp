// Command-line frontend for the lln library.
//
// Subcommands: solve, search, families, pell, classnum, lehmer, verify-corpus.
// Output modes: human (default), --json, and --tsv where tabular data exists.
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments.
//
// JSON conventions: big integers are decimal strings, keys are emitted in
// sorted order, and no floating-point values appear, so parse + re-serialize
// is byte-identical.

#include "lln/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace lln;

namespace {

json tuple_json(const SolutionTuple& t) {
    return json{{"a", t.a.str()}, {"x", t.x.str()}, {"y", t.y.str()},
                {"b", t.b.str()}, {"l", t.l.str()}, {"n", t.n.str()}};
}

std::string tuple_human(const SolutionTuple& t) {
    std::ostringstream os;
    os << "a=" << t.a << " x=" << t.x << " y=" << t.y << " b=" << t.b << " l=" << t.l
       << " n=" << t.n;
    return os.str();
}

json prime_power_json(const MaybePrimePower& pp) {
    if (pp.unknown) return json{{"status", "unknown"}};
    if (!pp.value) return json{{"status", "no"}};
    return json{{"status", "yes"},
                {"base", pp.value->base.str()},
                {"exponent", pp.value->exponent},
                {"sign", pp.value->sign}};
}

std::string prime_power_human(const MaybePrimePower& pp) {
    if (pp.unknown) return "undetermined";
    if (!pp.value) return "no";
    std::ostringstream os;
    if (pp.value->sign < 0) os << "-";
    os << pp.value->base << "^" << pp.value->exponent;
    return os.str();
}

json conditions_json(const ConditionReport& rep) {
    json j;
    j["a_mod4"] = rep.a_mod4;
    j["squarefree"] = rep.is_squarefree_flag;
    j["b_prime_power"] = prime_power_json(rep.b_prime_power);
    j["residue_plus"] = rep.congruence_residue_plus.str();
    j["residue_minus"] = rep.congruence_residue_minus.str();
    j["congruence_ok"] = rep.congruence_ok;
    j["gcd_n_b_ok"] = rep.gcd_n_b_ok;
    j["class_number"] = rep.h ? json(*rep.h) : json(nullptr);
    j["gcd_n_h_ok"] = rep.gcd_n_h_ok ? json(*rep.gcd_n_h_ok) : json(nullptr);
    j["a_special"] = rep.a_in_special_set;
    return j;
}

json certificate_json(const Certificate& cert, bool verified) {
    json j;
    j["kind"] = cert.kind_name();
    j["verified"] = verified;
    if (const auto* rc = std::get_if<ResidueContradiction>(&cert.detail)) {
        j["modulus"] = rc->modulus.str();
        j["context"] = rc->context;
        auto side = [](const ResidueSide& s) {
            return json{{"coeff", s.coeff.str()},
                        {"constant", s.constant.str()},
                        {"parity", s.parity == ParityKind::OddOnly    ? "odd"
                                   : s.parity == ParityKind::EvenOnly ? "even"
                                                                      : "any"}};
        };
        j["lhs"] = side(rc->lhs);
        j["rhs"] = side(rc->rhs);
        auto residues = [](const std::set<Int>& s) {
            json arr = json::array();
            for (const Int& r : s) arr.push_back(r.str());
            return arr;
        };
        j["lhs_residues"] = residues(rc->lhs_residues);
        j["rhs_residues"] = residues(rc->rhs_residues);
    }
    return j;
}

json membership_json(const MembershipResult& m) {
    json j;
    if (m.found)
        j["found"] = json{{"family", family_name(m.found->first)}, {"index", m.found->second}};
    else
        j["found"] = nullptr;
    j["exhausted"] = m.exhausted;
    return j;
}

// ---------------------------------------------------------------------------
// solve

int run_solve(const std::string& a_s, const std::string& b_s, unsigned l, unsigned n,
              bool as_json) {
    ProblemInstance inst{Int(a_s), Int(b_s), l, n};
    ConditionReport rep = condition_report(inst);
    Verdict v = solve(inst);
    bool cert_ok = !v.certificate || verify_certificate(*v.certificate);

    if (as_json) {
        json out;
        out["instance"] = json{{"a", inst.a.str()}, {"b", inst.b.str()}, {"l", inst.l}, {"n", inst.n}};
        json verdict;
        verdict["kind"] = verdict_kind_name(v.kind);
        verdict["certificate"] = v.certificate ? certificate_json(*v.certificate, cert_ok) : json(nullptr);
        json details;
        details["reason"] = v.reason;
        json fams = json::array();
        for (FamilyId f : v.families) fams.push_back(family_name(f));
        details["families"] = fams;
        details["membership"] = v.membership ? membership_json(*v.membership) : json(nullptr);
        json wit = json::array();
        for (const auto& t : v.witnesses) wit.push_back(tuple_json(t));
        details["witnesses"] = wit;
        details["failed_conditions"] = v.failed_conditions;
        verdict["details"] = details;
        out["verdict"] = verdict;
        out["conditions"] = conditions_json(rep);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "instance: a=" << inst.a << " b=" << inst.b << " l=" << inst.l
                  << " n=" << inst.n << "\n";
        std::cout << "verdict: " << verdict_kind_name(v.kind) << "\n";
        std::cout << "reason: " << v.reason << "\n";
        if (v.certificate)
            std::cout << "certificate: " << v.certificate->kind_name() << " ("
                      << (cert_ok ? "re-verified" : "FAILED re-verification") << ")\n";
        if (!v.families.empty()) {
            std::cout << "families:";
            for (FamilyId f : v.families) std::cout << " " << family_name(f);
            std::cout << "\n";
        }
        if (v.membership) {
            if (v.membership->found)
                std::cout << "membership: b^l is member " << v.membership->found->second << " of "
                          << family_name(v.membership->found->first) << "\n";
            else
                std::cout << "membership: " << (v.membership->exhausted ? "undecided (budget)" : "not a member")
                          << "\n";
        }
        for (const auto& f : v.failed_conditions) std::cout << "failed: " << f << "\n";
        for (const auto& w : v.witnesses) std::cout << "witness: " << tuple_human(w) << "\n";
        std::cout << "conditions: a_mod4=" << rep.a_mod4
                  << " b_prime_power=" << prime_power_human(rep.b_prime_power)
                  << " residue+=" << rep.congruence_residue_plus
                  << " residue-=" << rep.congruence_residue_minus
                  << " congruence_ok=" << (rep.congruence_ok ? "yes" : "no")
                  << " gcd_n_b_ok=" << (rep.gcd_n_b_ok ? "yes" : "no");
        if (rep.h) std::cout << " h=" << *rep.h << " gcd_n_h_ok=" << (*rep.gcd_n_h_ok ? "yes" : "no");
        std::cout << " special=" << (rep.a_in_special_set ? "yes" : "no") << "\n";
    }
    return cert_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search

int run_search(const std::string& a_s, const std::string& b_s, unsigned l, unsigned n,
               const std::string& y_max_s, unsigned threads, bool as_json, bool as_tsv) {
    SearchReport rep = brute_force(Int(a_s), Int(b_s), l, n, Int(y_max_s), threads);
    long long elapsed_ms = static_cast<long long>(rep.elapsed_seconds * 1000.0);
    std::cerr << "searched y in [1, " << rep.y_max << "] across " << rep.partitions
              << " partition(s) in " << elapsed_ms << " ms\n";
    if (as_json) {
        json out;
        out["instance"] = json{{"a", rep.a.str()}, {"b", rep.b.str()}, {"l", rep.l}, {"n", rep.n}};
        out["y_max"] = rep.y_max.str();
        out["partitions"] = rep.partitions;
        out["elapsed_ms"] = elapsed_ms;
        json sols = json::array();
        for (const auto& t : rep.solutions) sols.push_back(tuple_json(t));
        out["solutions"] = sols;
        std::cout << out.dump(2) << "\n";
    } else if (as_tsv) {
        std::cout << "# a\tx\ty\tb\tl\tn\n";
        for (const auto& t : rep.solutions)
            std::cout << t.a << "\t" << t.x << "\t" << t.y << "\t" << t.b << "\t" << t.l << "\t"
                      << t.n << "\n";
    } else {
        std::cout << "solutions: " << rep.solutions.size() << "\n";
        for (const auto& t : rep.solutions) std::cout << "  " << tuple_human(t) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// families

int run_families(const std::string& id_s, unsigned count, bool as_json, bool as_tsv) {
    std::vector<FamilyId> ids;
    if (id_s.empty()) {
        ids.assign(all_families.begin(), all_families.end());
    } else {
        bool ok = false;
        for (FamilyId f : all_families)
            if (family_name(f) == id_s) {
                ids.push_back(f);
                ok = true;
            }
        if (!ok) throw CLI::ValidationError("--id", "expected one of F1..F6, got '" + id_s + "'");
    }
    json arr = json::array();
    if (as_tsv) std::cout << "# family\tindex\tu\tv\tx\ty\tblpow\tcongruent_pm1_mod7\n";
    for (FamilyId id : ids) {
        for (const FamilyMember& m : generate(id, count)) {
            if (as_json) {
                arr.push_back(json{{"family", family_name(m.id)},
                                   {"index", m.index},
                                   {"u", m.u.str()},
                                   {"v", m.v.str()},
                                   {"x", m.x.str()},
                                   {"y", m.y.str()},
                                   {"blpow", m.blpow.str()},
                                   {"congruence_flag", m.congruence_flag.str()},
                                   {"congruent_pm1_mod7", m.congruent_pm1_mod7()},
                                   {"b_prime_power", prime_power_json(m.prime_power_flag)},
                                   {"coprime_xy", m.coprime_xy}});
            } else if (as_tsv) {
                std::cout << family_name(m.id) << "\t" << m.index << "\t" << m.u << "\t" << m.v
                          << "\t" << m.x << "\t" << m.y << "\t" << m.blpow << "\t"
                          << (m.congruent_pm1_mod7() ? 1 : 0) << "\n";
            } else {
                std::cout << family_name(m.id) << "[" << m.index << "]: (u,v)=(" << m.u << "," << m.v
                          << ") x=" << m.x << " y=" << m.y << " b^l=" << m.blpow
                          << " 4b^l mod 7=" << m.congruence_flag << "\n";
            }
        }
    }
    if (as_json) std::cout << arr.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// pell

int run_pell(const std::string& d_s, int n_const, unsigned count, bool odd_only, bool as_json) {
    PellForm form{Int(d_s), n_const};
    std::vector<PellSolution> sols;
    if (odd_only) {
        OddSolutions odd = odd_solutions(form, count);
        sols = std::move(odd.solutions);
    } else {
        auto fund = fundamental_solution(form);
        if (fund) {
            sols.push_back(*fund);
            while (sols.size() < count) sols.push_back(next_solution(sols.back()));
        }
    }
    if (as_json) {
        json out;
        out["d"] = form.d.str();
        out["n"] = form.n;
        json arr = json::array();
        for (const auto& s : sols)
            arr.push_back(json{{"u", s.u.str()}, {"v", s.v.str()}, {"index", s.index}});
        out["solutions"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        if (sols.empty()) std::cout << "no solutions\n";
        for (const auto& s : sols) std::cout << "(" << s.u << ", " << s.v << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// classnum

int run_classnum(long long a, bool tally, long long h_target, long long bound, bool as_json) {
    if (tally) {
        std::vector<std::int64_t> values = tally_class_numbers(h_target, bound);
        if (as_json) {
            json out;
            out["h"] = h_target;
            out["bound"] = bound;
            out["count"] = values.size();
            out["values"] = values;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "square-free a <= " << bound << " with h(-a) = " << h_target << ": "
                      << values.size() << " values\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << values[i] << ((i + 1) % 10 == 0 || i + 1 == values.size() ? "\n" : " ");
        }
        return 0;
    }
    long long h = class_number(a);
    if (as_json)
        std::cout << json{{"a", a}, {"h", h}}.dump(2) << "\n";
    else
        std::cout << "h(-" << a << ") = " << h << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// lehmer

int run_lehmer(const std::string& u_s, const std::string& v_s, const std::string& p_s, unsigned n,
               bool as_json) {
    LehmerParams params{Int(u_s), Int(v_s), Int(p_s)};
    Int abs_term = lehmer_number_abs(params, n);
    HalfElem e = half_power(params.u, params.v, params.p, n);
    PrimitiveDivisorResult pd = has_primitive_divisor(params, n);
    const char* status = pd.status == PrimitiveDivisorStatus::Yes   ? "yes"
                         : pd.status == PrimitiveDivisorStatus::No  ? "no"
                                                                    : "unknown";
    if (as_json) {
        json out;
        out["u"] = params.u.str();
        out["v"] = params.v.str();
        out["p"] = params.p.str();
        out["n"] = n;
        out["term_abs"] = abs_term.str();
        out["half_power"] = json{{"A", e.A.str()}, {"B", e.B.str()}};
        out["primitive_divisor"] = json{
            {"status", status}, {"witness", pd.witness ? json(pd.witness->str()) : json(nullptr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "params: u=" << params.u << " v=" << params.v << " p=" << params.p
                  << " n=" << n << "\n";
        std::cout << "|term|: " << abs_term << "\n";
        std::cout << "half power: A=" << e.A << " B=" << e.B << "\n";
        std::cout << "primitive divisor: " << status;
        if (pd.witness) std::cout << " (q=" << *pd.witness << ")";
        std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify-corpus

int run_verify_corpus(const std::string& file, bool as_json) {
    std::vector<SolutionTuple> entries;
    std::vector<std::string> rejected;
    if (file.empty()) {
        for (const auto& e : builtin_corpus()) entries.push_back(e.tuple);
    } else {
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("file", "cannot open '" + file + "'");
        ParsedCorpus parsed = parse_corpus_tsv(in);
        entries = std::move(parsed.entries);
        rejected = std::move(parsed.rejected);
    }
    std::vector<CorpusEntryReport> reports = verify_corpus(entries);
    bool all_ok = rejected.empty();
    for (const auto& r : reports) all_ok = all_ok && r.valid;

    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) {
            json j;
            j["source"] = r.source;
            j["valid"] = r.valid;
            j["error"] = r.error;
            if (r.valid) {
                j["residue_plus"] = r.residue_plus.str();
                j["residue_minus"] = r.residue_minus.str();
                j["congruent_pm1"] = r.congruent_pm1;
                j["b_prime_power"] = prime_power_json(r.b_prime_power);
            }
            arr.push_back(j);
        }
        json out;
        out["entries"] = arr;
        out["rejected"] = rejected;
        out["all_ok"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.valid ? "PASS" : "FAIL") << "  " << r.source;
            if (r.valid)
                std::cout << "  residue+=" << r.residue_plus << " residue-=" << r.residue_minus
                          << " pm1=" << (r.congruent_pm1 ? "yes" : "no")
                          << " b=" << prime_power_human(r.b_prime_power);
            else
                std::cout << "  " << r.error;
            std::cout << "\n";
        }
        for (const auto& r : rejected) std::cout << "FAIL  " << r << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvability of a*x^2 + b^(2l) = 4*y^n: verdicts, certificates, and searches"};
    app.require_subcommand(1);
    app.fallthrough();  // let --json / --tsv appear after the subcommand name

    bool as_json = false, as_tsv = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_flag("--tsv", as_tsv, "emit TSV on stdout (tabular subcommands)");

    std::string a_s = "7", b_s = "1", y_max_s = "1000", id_s, u_s = "1", v_s = "1", p_s = "7",
                d_s = "21", file_s;
    unsigned l = 1, n = 3, threads = 1, count = 1;
    int n_const = 1;
    bool odd_only = false, tally = false;
    long long cn_a = 7, h_target = 1, bound = 10000;

    CLI::App* solve_cmd = app.add_subcommand("solve", "decide one instance");
    solve_cmd->add_option("-a", a_s, "coefficient a (odd, positive, square-free)")->required();
    solve_cmd->add_option("-b", b_s, "base b (odd, nonzero, coprime to a)")->required();
    solve_cmd->add_option("-l", l, "exponent l >= 1")->required();
    solve_cmd->add_option("-n", n, "odd prime exponent n")->required();

    CLI::App* search_cmd = app.add_subcommand("search", "brute-force solutions up to a y bound");
    search_cmd->add_option("-a", a_s)->required();
    search_cmd->add_option("-b", b_s)->required();
    search_cmd->add_option("-l", l)->required();
    search_cmd->add_option("-n", n)->required();
    search_cmd->add_option("--y-max", y_max_s, "largest y to try")->required();
    search_cmd->add_option("--threads", threads, "parallel partitions (default 1)");

    CLI::App* fam_cmd = app.add_subcommand("families", "enumerate the six a=7, n=3 families");
    fam_cmd->add_option("--id", id_s, "one of F1..F6 (default: all)");
    fam_cmd->add_option("--count", count, "members per family")->required();

    CLI::App* pell_cmd = app.add_subcommand("pell", "solve u^2 - d*v^2 = N");
    pell_cmd->add_option("--d", d_s, "positive non-square d")->required();
    pell_cmd->add_option("--n-const", n_const, "right-hand side N in {1,-1,4,-4} (default 1)");
    pell_cmd->add_option("--count", count, "number of solutions (default 1)");
    pell_cmd->add_flag("--odd", odd_only, "only solutions with u, v both odd");

    CLI::App* cn_cmd = app.add_subcommand("classnum", "imaginary quadratic class numbers h(-a)");
    cn_cmd->set_help_flag("--help", "print help");  // frees -h for the --h option below
    cn_cmd->add_option("--a", cn_a, "square-free a > 0");
    cn_cmd->add_flag("--tally", tally, "list square-free a <= bound with h(-a) = h");
    cn_cmd->add_option("--h", h_target, "target class number for --tally");
    cn_cmd->add_option("--bound", bound, "upper bound for --tally (default 10000)");

    CLI::App* lehmer_cmd = app.add_subcommand("lehmer", "terms of the associated Lehmer sequence");
    lehmer_cmd->add_option("-u", u_s, "odd u")->required();
    lehmer_cmd->add_option("-v", v_s, "odd v, coprime to u")->required();
    lehmer_cmd->add_option("-p", p_s, "prime p = 3 (mod 4)")->required();
    lehmer_cmd->add_option("-n", n, "odd index n")->required();

    CLI::App* vc_cmd = app.add_subcommand("verify-corpus", "re-verify a TSV corpus of solutions");
    vc_cmd->add_option("file", file_s, "TSV file (default: built-in corpus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; any parse failure exits 2
    }

    try {
        if (*solve_cmd) return run_solve(a_s, b_s, l, n, as_json);
        if (*search_cmd) return run_search(a_s, b_s, l, n, y_max_s, threads, as_json, as_tsv);
        if (*fam_cmd) return run_families(id_s, count, as_json, as_tsv);
        if (*pell_cmd) return run_pell(d_s, n_const, count, odd_only, as_json);
        if (*cn_cmd) return run_classnum(cn_a, tally, h_target, bound, as_json);
        if (*lehmer_cmd) return run_lehmer(u_s, v_s, p_s, n, as_json);
        if (*vc_cmd) return run_verify_corpus(file_s, as_json);
    } catch (const CLI::Error& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
