#include "multigrad/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace multigrad {

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
    if (text == "rationals" || text == "qq") return FieldSpec{FieldKind::rationals, 0};
    if (text.rfind("gf:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || !std::all_of(num.begin(), num.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad field spec '" + text + "': expected gf:<prime>");
        unsigned long long p = 0;
        try {
            p = std::stoull(num);
        } catch (const std::exception&) {
            throw ParseError("bad field spec '" + text + "': characteristic out of range");
        }
        if (!is_prime(p))
            throw ParseError("field characteristic " + num + " is not prime");
        return FieldSpec{FieldKind::prime_field, p};
    }
    throw ParseError("bad field spec '" + text + "': expected gf:<prime> or rationals");
}

namespace {

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
    Multidegree deg(vars.size());
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty monomial");
    if (s.back() == '*') throw ParseError("empty factor in monomial '" + text + "'");
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t star = s.find('*', pos);
        const std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? s.size() : star + 1;
        if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
        std::string name = factor;
        long long exp = 1;
        std::size_t caret = factor.find('^');
        if (caret != std::string::npos) {
            name = factor.substr(0, caret);
            const std::string es = factor.substr(caret + 1);
            if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) {
                    return c >= '0' && c <= '9';
                }))
                throw ParseError("bad exponent in monomial '" + text + "'");
            exp = std::stoll(es);
        }
        if (exp == 0)
            throw ParseError("monomial '" + text +
                             "': exponent 0 not allowed (a unit generator collapses the module "
                             "to zero)");
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw ParseError("unknown variable '" + name + "' in monomial '" + text + "'");
        deg[static_cast<std::size_t>(it - vars.begin())] += static_cast<int>(exp);
    }
    return Monomial(deg);
}

MonomialIdeal parse_ideal(const nlohmann::json& arr, const std::vector<std::string>& vars) {
    if (!arr.is_array()) throw ParseError("'ideal' must be an array of monomial strings");
    std::vector<Monomial> gens;
    for (const auto& g : arr) {
        if (!g.is_string()) throw ParseError("ideal generators must be strings");
        gens.push_back(parse_monomial(g.get<std::string>(), vars));
    }
    return MonomialIdeal::minimalize(vars.size(), std::move(gens));
}

}  // namespace

ModuleInput parse_module(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("JSON syntax error: ") + e.what(), line, col);
    }
    if (!j.is_object()) throw ParseError("module file must be a JSON object");
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        throw ParseError("module file needs a nonempty 'vars' array");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string() || v.get<std::string>().empty())
            throw ParseError("variable names must be nonempty strings");
        vars.push_back(v.get<std::string>());
    }
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
        throw ParseError("duplicate variable name");
    const std::size_t n = vars.size();

    std::vector<ModulePresentation::Summand> summands;
    if (j.contains("ideal")) {
        if (j.contains("summands")) throw ParseError("give either 'ideal' or 'summands'");
        summands.push_back({Multidegree(n), parse_ideal(j["ideal"], vars)});
    } else if (j.contains("summands")) {
        if (!j["summands"].is_array() || j["summands"].empty())
            throw ParseError("'summands' must be a nonempty array");
        std::vector<Multidegree> shifts;
        for (const auto& s : j["summands"]) {
            if (!s.is_object() || !s.contains("shift") || !s.contains("ideal"))
                throw ParseError("each summand needs 'shift' and 'ideal'");
            const auto& sh = s["shift"];
            if (!sh.is_array() || sh.size() != n)
                throw ParseError("summand shift must be an integer array of length " +
                                 std::to_string(n));
            Multidegree shift(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (!sh[k].is_number_integer()) throw ParseError("shift entries must be integers");
                shift[k] = sh[k].get<int>();
            }
            shifts.push_back(shift);
            summands.push_back({shift, parse_ideal(s["ideal"], vars)});
        }
        // translate all shifts into N^n
        Multidegree lift(n);
        for (const auto& sh : shifts)
            for (std::size_t k = 0; k < n; ++k) lift[k] = std::max(lift[k], -sh[k]);
        for (auto& sm : summands) sm.shift = sm.shift + lift;
    } else {
        throw ParseError("module file needs 'ideal' or 'summands'");
    }
    return ModuleInput{std::move(vars), ModulePresentation(n, std::move(summands))};
}

ModuleInput parse_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open module file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_module(ss.str());
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names) {
    std::string s;
    for (std::size_t k = 0; k < var_names.size(); ++k) {
        const int e = m.deg[k];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += var_names[k];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

nlohmann::json multidegree_to_json(const Multidegree& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < a.size(); ++k) arr.push_back(a[k]);
    return arr;
}

nlohmann::json varset_to_json(const VarSet& s, const std::vector<std::string>& var_names) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t v : s.elements()) arr.push_back(var_names.at(v));
    return arr;
}

nlohmann::json module_to_json(const ModuleInput& m) {
    nlohmann::json j;
    j["vars"] = m.var_names;
    auto ideal_json = [&](const MonomialIdeal& ideal) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : ideal.generators())
            arr.push_back(monomial_to_string(g, m.var_names));
        return arr;
    };
    const auto& sms = m.module.summands();
    const bool single_plain = sms.size() == 1 && sms[0].shift.total() == 0;
    if (single_plain) {
        j["ideal"] = ideal_json(sms[0].ideal);
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sm : sms) {
            nlohmann::json s;
            s["shift"] = multidegree_to_json(sm.shift);
            s["ideal"] = ideal_json(sm.ideal);
            arr.push_back(s);
        }
        j["summands"] = arr;
    }
    return j;
}

std::string write_module(const ModuleInput& m) { return canonical_json_text(module_to_json(m)); }

std::string render_betti_text(const BettiTable& table, const StrandReport& sr) {
    const auto zg = z_graded(table);
    long long jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [key, dim] : zg) {
        const long long off = key.second - key.first;
        jmin = first ? off : std::min(jmin, off);
        jmax = first ? off : std::max(jmax, off);
        first = false;
    }

    const int pd = table.projdim();
    std::vector<std::string> header, totals;
    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(jmax - jmin + 1));
    for (int i = 0; i <= pd; ++i) {
        header.push_back(std::to_string(i));
        totals.push_back(std::to_string(table.total(i)));
        for (long long off = jmin; off <= jmax; ++off) {
            auto it = zg.find({i, i + off});
            rows[static_cast<std::size_t>(off - jmin)].push_back(
                it == zg.end() ? "." : std::to_string(it->second));
        }
    }

    std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 1, 1);
    for (int i = 0; i <= pd; ++i) {
        auto& w = width[static_cast<std::size_t>(i)];
        w = std::max(w, header[static_cast<std::size_t>(i)].size());
        w = std::max(w, totals[static_cast<std::size_t>(i)].size());
        for (const auto& row : rows) w = std::max(w, row[static_cast<std::size_t>(i)].size());
    }
    std::size_t label_w = 6;  // "total:"
    for (long long off = jmin; off <= jmax; ++off)
        label_w = std::max(label_w, std::to_string(off).size() + 1);

    auto pad_left = [](const std::string& s, std::size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::ostringstream out;
    auto emit_row = [&](const std::string& label, const std::vector<std::string>& cells) {
        out << pad_left(label, label_w);
        for (int i = 0; i <= pd; ++i)
            out << " " << pad_left(cells[static_cast<std::size_t>(i)],
                                   width[static_cast<std::size_t>(i)]);
        out << "\n";
    };
    emit_row("", header);
    emit_row("total:", totals);
    for (long long off = jmin; off <= jmax; ++off)
        emit_row(std::to_string(off) + ":", rows[static_cast<std::size_t>(off - jmin)]);

    out << "\nmultigraded:\n";
    for (const auto& [key, dim] : table.entries)
        out << "  i=" << key.first << " a=" << key.second.to_string() << " dim=" << dim << "\n";

    out << "\nprojdim " << sr.projdim << "  reg " << sr.reg << "\n";
    out << "d:";
    for (std::size_t k = 0; k < sr.d.size(); ++k) {
        out << " " << sr.d[k];
        if (static_cast<int>(k) >= sr.degenerate_from) out << "*";
    }
    out << "\n";
    for (std::size_t k = 0; k < sr.lin.size(); ++k) {
        out << "lin[k=" << k << "]:";
        for (std::size_t v : sr.lin[k]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

nlohmann::json betti_report_json(const ModuleInput& in, const BettiTable& table,
                                 const StrandReport& sr) {
    nlohmann::json j;
    j["schema"] = "multigrad/betti-report/1";
    j["field"] = table.field.name();
    j["module"] = module_to_json(in);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, dim] : table.entries) {
        nlohmann::json e;
        e["i"] = key.first;
        e["a"] = multidegree_to_json(key.second);
        e["dim"] = dim;
        entries.push_back(e);
    }
    j["entries"] = entries;
    nlohmann::json zj = nlohmann::json::array();
    for (const auto& [key, dim] : z_graded(table)) {
        nlohmann::json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["dim"] = dim;
        zj.push_back(e);
    }
    j["z_graded"] = zj;
    nlohmann::json s;
    s["projdim"] = sr.projdim;
    s["reg"] = sr.reg;
    s["d"] = sr.d;
    s["degenerate_from"] = sr.degenerate_from;
    s["lin"] = sr.lin;
    j["strand"] = s;
    nlohmann::json totals = nlohmann::json::array();
    for (int i = 0; i <= table.projdim(); ++i) totals.push_back(table.total(i));
    j["totals"] = totals;
    return j;
}

namespace {

nlohmann::json class_chain_json(const ModuleInput& in, KoszulPolyseq& inst, const GroupKey& key,
                                const std::vector<Scalar>& chain) {
    const Field& f = inst.field();
    const StrandComplex& sc = inst.strand(key.f, key.a);
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t t = 0; t < chain.size(); ++t) {
        if (f.is_zero(chain[t])) continue;
        const auto& el = sc.basis(key.i)[t];
        nlohmann::json e;
        e["index"] = t;
        e["wedge"] = varset_to_json(el.wedge, in.var_names);
        e["summand"] = el.summand;
        e["carrier"] = monomial_to_string(el.carrier, in.var_names);
        e["coeff"] = f.to_string(chain[t]);
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

nlohmann::json witness_report_json(const ModuleInput& in, KoszulPolyseq& inst,
                                   const WitnessCertificate& cert, const ValidationReport& val) {
    const Field& f = inst.field();
    nlohmann::json j;
    j["schema"] = "multigrad/witness-report/1";
    j["field"] = f.name();
    j["module"] = module_to_json(in);
    j["p"] = cert.p;
    j["a"] = multidegree_to_json(cert.a);
    j["F"] = varset_to_json(cert.f, in.var_names);
    j["excluded"] = varset_to_json(cert.excluded, in.var_names);

    nlohmann::json seed;
    nlohmann::json seed_coords = nlohmann::json::array();
    for (const auto& c : cert.seed.coords) seed_coords.push_back(f.to_string(c));
    seed["coords"] = seed_coords;
    seed["chain"] = class_chain_json(in, inst, cert.seed.key, cert.seed.chain);
    j["seed"] = seed;

    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t i = 0; i < cert.per_i.size(); ++i) {
        nlohmann::json lvl;
        lvl["i"] = i;
        lvl["count"] = cert.per_i[i].size();
        lvl["bound"] = binomial(static_cast<std::uint64_t>(cert.p - cert.excluded.size()), i);
        nlohmann::json ws = nlohmann::json::array();
        for (const Witness& w : cert.per_i[i]) {
            nlohmann::json e;
            e["I"] = varset_to_json(w.index_set, in.var_names);
            e["b"] = multidegree_to_json(w.b);
            e["degree"] = multidegree_to_json(cert.a - w.b);
            e["hom_degree"] = w.hom_degree;
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& c : w.cls.coords) coords.push_back(f.to_string(c));
            e["coords"] = coords;
            e["chain"] = class_chain_json(in, inst, w.cls.key, w.cls.chain);
            ws.push_back(e);
        }
        lvl["witnesses"] = ws;
        levels.push_back(lvl);
    }
    j["certificate"] = levels;

    nlohmann::json v;
    v["pass"] = val.pass;
    v["first_violation"] = val.first_violation;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : val.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    v["checks"] = checks;
    j["validation"] = v;
    return j;
}

nlohmann::json betti_bounds_json(const BettiBoundsReport& rep) {
    nlohmann::json j;
    j["p"] = rep.p;
    j["a"] = multidegree_to_json(rep.a);
    j["hypothesis_holds"] = rep.hypothesis_holds;
    j["pass"] = rep.pass;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.per_i) {
        nlohmann::json e;
        e["i"] = c.i;
        e["constrained_sum"] = c.constrained_sum;
        e["distinct_degrees"] = c.distinct_degrees;
        e["bound"] = c.bound;
        e["pass"] = c.pass;
        arr.push_back(e);
    }
    j["per_i"] = arr;
    j["totals"] = rep.totals;
    j["totals_pass"] = rep.totals_pass;
    j["totals_sum"] = rep.totals_sum;
    j["two_to_p"] = rep.two_to_p;
    j["sum_pass"] = rep.sum_pass;
    return j;
}

nlohmann::json strand_bounds_json(const StrandBoundsReport& rep) {
    nlohmann::json j;
    j["k"] = rep.k;
    j["d_k"] = rep.d_k;
    j["p"] = rep.p;
    j["hypothesis_holds"] = rep.hypothesis_holds;
    j["pass"] = rep.pass;
    auto checks_json = [](const std::vector<StrandBoundsPerI>& checks) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e;
            e["i"] = c.i;
            e["value"] = c.value;
            e["bound"] = c.bound;
            e["pass"] = c.pass;
            arr.push_back(e);
        }
        return arr;
    };
    j["checks"] = checks_json(rep.checks);
    j["detected_linear"] = rep.detected_linear;
    j["projdim"] = rep.projdim;
    j["linear_resolution_checks"] = checks_json(rep.linear_resolution_checks);
    return j;
}

nlohmann::json tor_bounds_json(const TorBoundsReport& rep) {
    nlohmann::json j;
    j["p"] = rep.p;
    j["a"] = multidegree_to_json(rep.a);
    j["hypothesis_holds"] = rep.hypothesis_holds;
    j["pass"] = rep.pass;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e;
        e["i"] = c.i;
        e["distinct_degrees"] = c.distinct_degrees;
        e["bound"] = c.bound;
        e["pass"] = c.pass;
        arr.push_back(e);
    }
    j["per_i"] = arr;
    return j;
}

std::string canonical_json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace multigrad
